pub mod check;
pub mod domin;
pub mod expr;
pub mod graph;
pub mod hamilton;
pub mod report;
pub mod ring;
