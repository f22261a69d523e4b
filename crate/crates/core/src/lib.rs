pub mod chart;
pub mod error;
pub mod expr;
pub mod f2;
pub mod grading;
pub mod motivic;
pub mod mutation;
pub mod point;
pub mod realization;
pub mod ring;
pub mod verify;
