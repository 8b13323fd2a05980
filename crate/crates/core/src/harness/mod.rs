//! Structure files, verification campaigns and the command layer used by the
//! `posemi` binary.

pub mod campaign;
pub mod commands;
pub mod file;

pub use campaign::{run_campaign, verify_structure, Campaign, CampaignConfig, Scope};
pub use file::{load, parse, save, NamedStructure, Structure, StructureFile, StructureKind};
