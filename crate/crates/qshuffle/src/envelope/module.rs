//! Free modules `U_hbar(gl_N) ⊗ (C^N)^{⊗k}` and their duals, with left and
//! right `U`-actions, the operators `Ω_i`, `Ω*_i` and the permutations `σ_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::{AlgError, Poly, Var, Q};

use super::pbw::{Gen, PbwElement};

/// Element `Σ x_a ⊗ v_{a_1} ⊗ … ⊗ v_{a_k}` (or with `φ`'s when `dual`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleElement {
    n: usize,
    k: usize,
    dual: bool,
    terms: BTreeMap<Vec<u8>, PbwElement>,
}

fn hbar() -> Poly {
    Poly::var(Var::Hbar)
}

impl FreeModuleElement {
    pub fn zero(n: usize, k: usize, dual: bool) -> FreeModuleElement {
        FreeModuleElement {
            n,
            k,
            dual,
            terms: BTreeMap::new(),
        }
    }

    /// `x ⊗ v_{idx}` with 1-based indices.
    pub fn basis(n: usize, dual: bool, idx: &[u8], x: PbwElement) -> Result<FreeModuleElement, AlgError> {
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i as usize > n) {
            return Err(AlgError::InvalidArgument(format!("index {bad} outside 1..{n}")));
        }
        let mut e = FreeModuleElement::zero(n, idx.len(), dual);
        e.add_term(idx.to_vec(), x);
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn tensor_len(&self) -> usize {
        self.k
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, PbwElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, idx: Vec<u8>, x: PbwElement) {
        if x.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx.clone()).or_insert_with(PbwElement::zero);
        *slot = slot.add(&x);
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn add(&self, o: &FreeModuleElement) -> FreeModuleElement {
        let mut r = self.clone();
        for (i, x) in &o.terms {
            r.add_term(i.clone(), x.clone());
        }
        r
    }

    pub fn sub(&self, o: &FreeModuleElement) -> FreeModuleElement {
        self.add(&o.scale(&Poly::int(-1)))
    }

    pub fn scale(&self, c: &Poly) -> FreeModuleElement {
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        for (i, x) in &self.terms {
            r.add_term(i.clone(), x.scale(c));
        }
        r
    }

    /// Left action `y · (x ⊗ v) = yx ⊗ v`.
    pub fn left_mul(&self, y: &PbwElement) -> FreeModuleElement {
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        for (i, x) in &self.terms {
            r.add_term(i.clone(), y.mul(x));
        }
        r
    }

    /// `E_ab` acting on one basis vector; `None` when the result vanishes.
    fn gen_on_vector(&self, g: Gen, c: u8) -> Option<(u8, i64)> {
        if self.dual {
            // E_ab φ_c = -δ_ac φ_b
            (g.i == c).then_some((g.j, -1))
        } else {
            // E_ab v_c = δ_bc v_a
            (g.j == c).then_some((g.i, 1))
        }
    }

    /// Right action `(x ⊗ v) E = xE ⊗ v - hbar x ⊗ (E · v)`, `E` acting on
    /// the tensor factors by the Leibniz rule.
    pub fn right_act_gen(&self, g: Gen) -> FreeModuleElement {
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        let mh = -hbar();
        for (idx, x) in &self.terms {
            r.add_term(idx.clone(), x.mul_gen(g));
            for t in 0..idx.len() {
                if let Some((c, s)) = self.gen_on_vector(g, idx[t]) {
                    let mut j = idx.clone();
                    j[t] = c;
                    r.add_term(j, x.scale(&mh.scale(&Q::from_integer(s.into()))));
                }
            }
        }
        r
    }

    /// Right action of an arbitrary element of `U`.
    pub fn right_act(&self, y: &PbwElement) -> FreeModuleElement {
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        for (m, c) in y.terms() {
            let mut part = self.clone();
            for &g in m {
                part = part.right_act_gen(g);
            }
            r = r.add(&part.scale(c));
        }
        r
    }

    /// `Ω` (or `Ω*`) on one tensor factor `1 ⊗ v_b`, as `Σ_c y_c ⊗ v_c`.
    fn omega_single(&self, b: u8) -> Vec<(u8, PbwElement)> {
        let n = self.n as u8;
        if self.dual {
            // Ω*(φ_b) = Σ_c φ_c E_cb = Σ_c E_cb φ_c + N hbar φ_b
            (1..=n)
                .map(|c| {
                    let mut y = PbwElement::gen(c as usize, b as usize);
                    if c == b {
                        y = y.add(&PbwElement::scalar(hbar().scale(&Q::from_integer((self.n as i64).into()))));
                    }
                    (c, y)
                })
                .collect()
        } else {
            // Ω(v_b) = Σ_c E_bc v_c
            (1..=n).map(|c| (c, PbwElement::gen(b as usize, c as usize))).collect()
        }
    }

    /// `Ω_slot`: `Ω` on the `slot`-th factor of the tensor product over `U`,
    /// moved to the front through the right action on the preceding factors.
    pub fn omega(&self, slot: usize) -> Result<FreeModuleElement, AlgError> {
        if slot == 0 || slot > self.k {
            return Err(AlgError::InvalidArgument(format!("slot {slot} outside 1..{}", self.k)));
        }
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        for (idx, x) in &self.terms {
            let prefix = FreeModuleElement {
                n: self.n,
                k: slot - 1,
                dual: self.dual,
                terms: BTreeMap::from([(idx[..slot - 1].to_vec(), x.clone())]),
            };
            for (c, y) in self.omega_single(idx[slot - 1]) {
                for (pidx, z) in prefix.right_act(&y).terms {
                    let mut j = pidx;
                    j.push(c);
                    j.extend_from_slice(&idx[slot..]);
                    r.add_term(j, z);
                }
            }
        }
        Ok(r)
    }

    /// `Ω_slot` through the closed form `Ω^{(slot)} ∓ hbar Σ_{t<slot} P_{t,slot}`
    /// (`-` for `v`, `+` for `φ`).
    pub fn omega_closed_form(&self, slot: usize) -> Result<FreeModuleElement, AlgError> {
        if slot == 0 || slot > self.k {
            return Err(AlgError::InvalidArgument(format!("slot {slot} outside 1..{}", self.k)));
        }
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        let corr = if self.dual { hbar() } else { -hbar() };
        for (idx, x) in &self.terms {
            for (c, y) in self.omega_single(idx[slot - 1]) {
                let mut j = idx.clone();
                j[slot - 1] = c;
                r.add_term(j, x.mul(&y));
            }
            for t in 0..slot - 1 {
                let mut j = idx.clone();
                j.swap(t, slot - 1);
                r.add_term(j, x.scale(&corr));
            }
        }
        Ok(r)
    }

    /// Swaps tensor factors `i` and `i + 1`.
    pub fn sigma(&self, i: usize) -> Result<FreeModuleElement, AlgError> {
        if i == 0 || i >= self.k {
            return Err(AlgError::InvalidArgument(format!("σ_{i} outside 1..{}", self.k.saturating_sub(1))));
        }
        let mut r = FreeModuleElement::zero(self.n, self.k, self.dual);
        for (idx, x) in &self.terms {
            let mut j = idx.clone();
            j.swap(i - 1, i);
            r.add_term(j, x.clone());
        }
        Ok(r)
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = if self.dual { "phi" } else { "v" };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, x)| {
                let v: Vec<String> = idx.iter().map(|i| format!("{letter}{i}")).collect();
                format!("({x})*{}", v.join("*"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
