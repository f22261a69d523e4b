//! Deliberate rule mutations, used to show that the verification suites detect broken
//! multiplication rules.
//!
//! A mutation is active only on the thread that installed it, so concurrently running checks
//! never observe each other's mutations.

use std::cell::Cell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Multiplication by u² on the truncated blocks keeps monomials with n < 2 (sending them to
    /// n = 0) instead of killing them.
    KeepLowU2,
    /// The map from the ẼC₂ module to the point ring keeps monomials with positive a-exponent.
    KeepPositiveA,
    /// Products of two torsion monomials return the left factor instead of zero.
    TorsionProducts,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::KeepLowU2,
        Mutation::KeepPositiveA,
        Mutation::TorsionProducts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::KeepLowU2 => "keep-low-u2",
            Mutation::KeepPositiveA => "keep-positive-a",
            Mutation::TorsionProducts => "torsion-products",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mutation '{s}'"))
    }
}

thread_local! {
    static ACTIVE: Cell<Option<Mutation>> = const { Cell::new(None) };
}

pub(crate) fn is_active(m: Mutation) -> bool {
    ACTIVE.with(|a| a.get() == Some(m))
}

/// Runs `f` with `mutation` installed on the current thread.
pub fn with_mutation<T>(mutation: Mutation, f: impl FnOnce() -> T) -> T {
    struct Restore(Option<Mutation>);
    impl Drop for Restore {
        fn drop(&mut self) {
            ACTIVE.with(|a| a.set(self.0));
        }
    }
    let _restore = Restore(ACTIVE.with(|a| a.replace(Some(mutation))));
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_to_closure() {
        assert!(!is_active(Mutation::KeepLowU2));
        with_mutation(Mutation::KeepLowU2, || {
            assert!(is_active(Mutation::KeepLowU2));
            assert!(!is_active(Mutation::TorsionProducts));
        });
        assert!(!is_active(Mutation::KeepLowU2));
    }

    #[test]
    fn names_round_trip() {
        for m in Mutation::ALL {
            assert_eq!(m.name().parse::<Mutation>(), Ok(m));
        }
    }
}
