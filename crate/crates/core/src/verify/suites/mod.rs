pub mod conjecture;
pub mod equidist;
pub mod interpretations;
pub mod mfs_suite;
pub mod minus_one;
pub mod properties;
pub mod props;
pub mod section6;
