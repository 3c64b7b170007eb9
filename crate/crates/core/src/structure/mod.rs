//! The structure theory: local isomorphisms at a vertex, the J-class
//! embedding at a component, the global report and the verification suite.

mod component;
mod local;
mod report;
mod verify;

pub use component::{embed_jclass, ComponentStructure, JClassImage};
pub use local::{iso_cycles_to_poly, iso_dclass_to_brandt, DClassImage, LocalStructure};
pub use report::{iso_type, structural_report, ComponentEntry, StructureReport, VertexEntry};
pub use verify::{
    iso_checks, random_element, random_path_to, sample_axioms, verify_suite, verify_suite_with, CheckResult,
    VerificationReport, DEFAULT_SAMPLES, SAMPLE_PATH_LEN,
};
