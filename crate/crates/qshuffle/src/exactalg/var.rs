//! Symbolic variables and their slots in the global variable order.

use std::fmt;

/// Largest index accepted for the indexed families `w`, `Y`, `z`, `xi`.
pub const MAX_INDEX: u8 = 8;

const W0: usize = 0;
const Y0: usize = W0 + MAX_INDEX as usize;
const Z0: usize = Y0 + MAX_INDEX as usize;
const U_SLOT: usize = Z0 + MAX_INDEX as usize;
const V_SLOT: usize = U_SLOT + 1;
const XI0: usize = V_SLOT + 1;
const KAPPA_SLOT: usize = XI0 + MAX_INDEX as usize + 1;
const PSI_SLOT: usize = KAPPA_SLOT + 1;
const HBAR_SLOT: usize = PSI_SLOT + 1;

/// Number of variable slots in an exponent vector.
pub const NVARS: usize = HBAR_SLOT + 1;

/// A variable. The declaration order of the variants is the global order
/// `w < Y < z < u < v < xi < kappa < psi < hbar`, then by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    W(u8),
    Y(u8),
    Z(u8),
    U,
    V,
    /// `Xi(0)` prints as `xi`, `Xi(i)` as `xi{i}`.
    Xi(u8),
    Kappa,
    Psi,
    Hbar,
}

impl Var {
    /// Slot of the variable in an exponent vector.
    ///
    /// # Panics
    /// If an index is outside `1..=MAX_INDEX` (or `0..=MAX_INDEX` for `Xi`).
    pub fn slot(self) -> usize {
        let idx = |i: u8, lo: u8| {
            assert!(
                (lo..=MAX_INDEX).contains(&i),
                "variable index {i} out of range"
            );
            (i - lo) as usize
        };
        match self {
            Var::W(i) => W0 + idx(i, 1),
            Var::Y(i) => Y0 + idx(i, 1),
            Var::Z(i) => Z0 + idx(i, 1),
            Var::U => U_SLOT,
            Var::V => V_SLOT,
            Var::Xi(i) => XI0 + idx(i, 0),
            Var::Kappa => KAPPA_SLOT,
            Var::Psi => PSI_SLOT,
            Var::Hbar => HBAR_SLOT,
        }
    }

    /// Inverse of [`Var::slot`].
    pub fn from_slot(s: usize) -> Var {
        match s {
            s if s < Y0 => Var::W((s - W0) as u8 + 1),
            s if s < Z0 => Var::Y((s - Y0) as u8 + 1),
            s if s < U_SLOT => Var::Z((s - Z0) as u8 + 1),
            U_SLOT => Var::U,
            V_SLOT => Var::V,
            s if s < KAPPA_SLOT => Var::Xi((s - XI0) as u8),
            KAPPA_SLOT => Var::Kappa,
            PSI_SLOT => Var::Psi,
            HBAR_SLOT => Var::Hbar,
            _ => panic!("slot {s} out of range"),
        }
    }

    /// Parses a variable name such as `w1`, `Y2`, `z3`, `hbar`, `kappa`, `xi2`.
    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "u" => return Some(Var::U),
            "v" => return Some(Var::V),
            "xi" => return Some(Var::Xi(0)),
            "kappa" => return Some(Var::Kappa),
            "psi" => return Some(Var::Psi),
            "hbar" => return Some(Var::Hbar),
            _ => {}
        }
        let (fam, rest): (fn(u8) -> Var, &str) = if let Some(r) = name.strip_prefix("xi") {
            (Var::Xi, r)
        } else if let Some(r) = name.strip_prefix('w') {
            (Var::W, r)
        } else if let Some(r) = name.strip_prefix('Y') {
            (Var::Y, r)
        } else if let Some(r) = name.strip_prefix('z') {
            (Var::Z, r)
        } else {
            return None;
        };
        if rest.is_empty() || rest.starts_with('0') || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let i: u8 = rest.parse().ok()?;
        (1..=MAX_INDEX).contains(&i).then(|| fam(i))
    }

    /// True for the central spectral parameters `u` and `v`.
    pub fn is_spectral(self) -> bool {
        matches!(self, Var::U | Var::V)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::W(i) => write!(f, "w{i}"),
            Var::Y(i) => write!(f, "Y{i}"),
            Var::Z(i) => write!(f, "z{i}"),
            Var::U => f.write_str("u"),
            Var::V => f.write_str("v"),
            Var::Xi(0) => f.write_str("xi"),
            Var::Xi(i) => write!(f, "xi{i}"),
            Var::Kappa => f.write_str("kappa"),
            Var::Psi => f.write_str("psi"),
            Var::Hbar => f.write_str("hbar"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_roundtrip() {
        for s in 0..NVARS {
            assert_eq!(Var::from_slot(s).slot(), s);
        }
    }

    #[test]
    fn order_matches_slots() {
        let vars = [
            Var::W(2),
            Var::Y(1),
            Var::Z(3),
            Var::U,
            Var::V,
            Var::Xi(0),
            Var::Xi(2),
            Var::Kappa,
            Var::Psi,
            Var::Hbar,
        ];
        for p in vars.windows(2) {
            assert!(p[0] < p[1]);
            assert!(p[0].slot() < p[1].slot());
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(Var::parse("w3"), Some(Var::W(3)));
        assert_eq!(Var::parse("Y1"), Some(Var::Y(1)));
        assert_eq!(Var::parse("xi"), Some(Var::Xi(0)));
        assert_eq!(Var::parse("xi2"), Some(Var::Xi(2)));
        assert_eq!(Var::parse("w0"), None);
        assert_eq!(Var::parse("w9"), None);
        assert_eq!(Var::parse("y1"), None);
        for s in 0..NVARS {
            let v = Var::from_slot(s);
            assert_eq!(Var::parse(&v.to_string()), Some(v));
        }
    }
}
