pub mod format;
pub mod normalizer;
pub mod reduction;
pub mod solver;
pub mod verify;
pub mod words;
