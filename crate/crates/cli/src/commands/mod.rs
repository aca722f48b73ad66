pub mod budget;
pub mod measure;
pub mod optimize;
pub mod pgu;
pub mod simulate;
