//! sl₂-triples, cocharacters built from them, weight gradings and lowest-weight
//! splittings.

mod cocharacter;
mod grading;
mod triple;

pub use cocharacter::{adapted_cocharacter, eigenweight_cocharacter, Cocharacter};
pub use grading::{lowest_weight_split, weight_grading, LowestWeightPiece};
pub use triple::{commuting_sl2, jacobson_morozov, SL2Triple};
