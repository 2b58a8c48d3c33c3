pub mod border;
pub mod cli;
pub mod choice;
pub mod coeff;
pub mod poly;
pub mod quotient;
pub mod solve;
pub mod syzygy;
