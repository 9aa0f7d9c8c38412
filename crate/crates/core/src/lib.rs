pub mod clifford;
pub mod dsii;
pub mod grid;
pub mod matrix_rep;
pub mod run;
pub mod spectral;
pub mod weierstrass;
