//! Reflection groups, their actions on polynomials, and class parameters.

mod group;
pub mod invariants;
mod params;

pub use group::{ConjugacyClass, GroupKind, Reflection, ReflectionGroup};
pub use invariants::{basic_invariants, symmetrize_on, Side};
pub use params::{ClassParams, VarLayout};

use crate::error::{Error, Result};
use crate::exact::{QSqrt5, Q};

/// A group realized over the smallest field that holds its matrices.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Rational(ReflectionGroup<Q>),
    Sqrt5(ReflectionGroup<QSqrt5>),
}

/// Run `$body` with `$w` bound to the concrete group, whatever its field.
#[macro_export]
macro_rules! with_group {
    ($g:expr, $w:ident => $body:expr) => {
        match $g {
            $crate::coxeter::AnyGroup::Rational($w) => $body,
            $crate::coxeter::AnyGroup::Sqrt5($w) => $body,
        }
    };
}

impl AnyGroup {
    pub fn name(&self) -> String {
        with_group!(self, w => w.name())
    }
}

/// Parse labels like `Z2`, `S4`, `B2`, `I2:5`.
pub fn parse_group(label: &str) -> Result<AnyGroup> {
    let s = label.trim();
    let bad = || Error::UnknownGroup(label.to_string());
    if s.eq_ignore_ascii_case("Z2") {
        return Ok(AnyGroup::Rational(ReflectionGroup::z2()));
    }
    if let Some(m) = s.strip_prefix("I2:").or_else(|| s.strip_prefix("i2:")) {
        let m: usize = m.parse().map_err(|_| bad())?;
        return if m == 5 {
            Ok(AnyGroup::Sqrt5(ReflectionGroup::dihedral(5)?))
        } else {
            Ok(AnyGroup::Rational(ReflectionGroup::dihedral(m)?))
        };
    }
    let (head, tail) = s.split_at(1.min(s.len()));
    let n: usize = tail.parse().map_err(|_| bad())?;
    match head {
        "S" | "s" => Ok(AnyGroup::Rational(ReflectionGroup::symmetric(n)?)),
        "B" | "b" => Ok(AnyGroup::Rational(ReflectionGroup::hyperoctahedral(n)?)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labels() {
        for (l, order) in [("Z2", 2), ("S4", 24), ("B2", 8), ("I2:5", 10), ("I2:6", 12)] {
            let g = parse_group(l).unwrap();
            assert_eq!(with_group!(&g, w => w.order()), order);
        }
        assert!(parse_group("E8").is_err());
        assert!(parse_group("I2:7").is_err());
    }
}
