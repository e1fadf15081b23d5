use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size limits guarding the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximal rank of a quadratic form whose Clifford algebra is expanded
    /// on the blade basis (the algebra has `2^max_dim` blades).
    pub max_dim: u32,
    /// Maximal dimension of an explicit tensor power `E^{⊗k}`.
    pub max_tensor: u64,
    /// Maximal number of variables of a truncated polynomial ring.
    pub max_vars: u32,
    /// Maximal cyclotomic order.
    pub max_k: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_dim: 12,
            max_tensor: 4096,
            max_vars: 8,
            max_k: 32,
        }
    }
}

impl Caps {
    pub fn check_dim(&self, n: usize) -> Result<()> {
        check("blade dimension", n as u64, self.max_dim as u64)
    }

    pub fn check_tensor(&self, d: u64) -> Result<()> {
        check("tensor dimension", d, self.max_tensor)
    }

    pub fn check_vars(&self, r: u32) -> Result<()> {
        check("variable count", r as u64, self.max_vars as u64)
    }

    pub fn check_order(&self, k: u32) -> Result<()> {
        check("cyclotomic order", k as u64, self.max_k as u64)
    }
}

fn check(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
