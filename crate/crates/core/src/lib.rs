//! Mechanical checks for the level 2 twist subgroup of the mapping class
//! group of a non-orientable surface: free-group words, coset enumeration,
//! subgroup presentations and abelianization, and the mod-2 homology model.

pub mod coset_enum;
pub mod mod2;
pub mod subgroup_pres;
pub mod words;
pub mod verifier;
