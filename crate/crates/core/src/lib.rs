pub mod assembly;
pub mod bounds;
pub mod dot;
pub mod duality;
pub mod error;
pub mod heyting;
pub mod io;
pub mod lattice;
pub mod poset;
pub mod sets;
pub mod simmons;
pub mod space;
pub mod spatiality;
pub mod subset;
pub mod sweep;
