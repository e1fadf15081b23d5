use std::fmt;

use serde::{Serialize, Serializer};

use super::{Cyclotomic, Rational, Truncated};

/// A dynamically typed exact value, used at the reporting boundary.
#[derive(Debug, Clone, PartialEq)]
pub enum RingValue {
    Rational(Rational),
    Cyclotomic(Cyclotomic<Rational>),
    Truncated(Truncated),
}

impl RingValue {
    /// Short description of the ring the value lives in.
    pub fn ring_name(&self) -> String {
        match self {
            RingValue::Rational(_) => "Q".to_string(),
            RingValue::Cyclotomic(c) => format!("Q(w), w^{} = 1", c.order()),
            RingValue::Truncated(t) => format!("Q[x1..x{}]/(xi^2)", t.vars()),
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingValue::Rational(r) => write!(f, "{r}"),
            RingValue::Cyclotomic(c) => write!(f, "{c}"),
            RingValue::Truncated(t) => write!(f, "{t}"),
        }
    }
}

impl Serialize for RingValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Rational> for RingValue {
    fn from(r: Rational) -> Self {
        RingValue::Rational(r)
    }
}

impl From<Cyclotomic<Rational>> for RingValue {
    fn from(c: Cyclotomic<Rational>) -> Self {
        RingValue::Cyclotomic(c)
    }
}

impl From<Truncated> for RingValue {
    fn from(t: Truncated) -> Self {
        RingValue::Truncated(t)
    }
}
