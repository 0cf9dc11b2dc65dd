//! Enumeration limits.
//!
//! Every operation whose cost grows with the group order checks one of
//! these before doing any work, so an oversized request fails fast with the
//! name of the limit it hit.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest rank for which all of `B_n` may be enumerated.
    pub group_enumeration: usize,
    /// Largest rank for centralizers found by filtering the whole group.
    pub centralizer: usize,
    /// Largest rank for class-level computations.
    pub class_level: usize,
    /// Largest rank for literal root counting.
    pub brute_force: usize,
    /// Largest rank for floating-point induced-character sums.
    pub psi_brute: usize,
    /// Largest weight of a generating function truncation.
    pub series: usize,
    /// Largest rank for brute-force symmetric-group computations.
    pub sn_brute: usize,
    /// Largest rank for irreducible character tables.
    pub table: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            group_enumeration: 8,
            centralizer: 6,
            class_level: 12,
            brute_force: 7,
            psi_brute: 5,
            series: 8,
            sn_brute: 7,
            table: 10,
        }
    }
}

impl Bounds {
    /// Names accepted by [`Bounds::set`], in declaration order.
    pub const NAMES: [&'static str; 8] = [
        "group-enumeration",
        "centralizer",
        "class-level",
        "brute-force",
        "psi-brute",
        "series",
        "sn-brute",
        "table",
    ];

    pub fn set(&mut self, name: &str, value: usize) -> Result<()> {
        let slot = match name {
            "group-enumeration" => &mut self.group_enumeration,
            "centralizer" => &mut self.centralizer,
            "class-level" => &mut self.class_level,
            "brute-force" => &mut self.brute_force,
            "psi-brute" => &mut self.psi_brute,
            "series" => &mut self.series,
            "sn-brute" => &mut self.sn_brute,
            "table" => &mut self.table,
            _ => {
                return Err(Error::InvalidArgument(alloc::format!(
                    "unknown bound `{name}`"
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}

pub(crate) fn check(name: &'static str, limit: usize, requested: usize) -> Result<()> {
    if requested > limit {
        Err(Error::BoundExceeded {
            name,
            limit,
            requested,
        })
    } else {
        Ok(())
    }
}
