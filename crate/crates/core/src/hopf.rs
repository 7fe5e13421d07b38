//! Hopf algebras as structure-constant tensors.
//!
//! An algebra of dimension `n` over a field `k` is stored as:
//! - `mult[i][j][k]`: coefficient of `e_k` in `e_i * e_j`,
//! - `unit`: coordinates of `1`,
//! - `comult[i][j][k]`: coefficient of `e_j (x) e_k` in `Delta(e_i)`,
//! - `counit`: the values `eps(e_i)`,
//! - `antipode`: row `i` holds the coordinates of `S(e_i)`.
//!
//! Tensors in `H (x) H` are flattened by `e_i (x) e_j -> i*n + j`, the same
//! convention as [`crate::linalg::Matrix::kronecker`] on row vectors.
//!
//! Nothing in this module assumes the structure constants actually satisfy
//! the Hopf axioms; [`HopfAlgebra::verify_axioms`] checks all of them by
//! exhaustive evaluation on basis tuples and reports the first failing tuple
//! in lexicographic order. Construction validates shapes and scalar
//! membership only, so imported data can be loaded first and judged second.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::{Error, Result};
use serde_json::{json, Value};

/// Coordinates of an algebra element in the stored basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub coords: Vec<Scalar>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// An element of `H (x) H`, flattened row-major: coordinate `i*n + j` is the
/// coefficient of `e_i (x) e_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor2 {
    pub n: usize,
    pub coords: Vec<Scalar>,
}

impl Tensor2 {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.coords[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
}

/// Dense rank-3 tensor `t[i][j][k]`, flattened as `(i*n + j)*n + k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: &FieldSpec, n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![field.zero(); n * n * n],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.data[(i * self.n + j) * self.n + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.data[(i * self.n + j) * self.n + k] = v;
    }

    /// The fiber `t[i][j][.]` as a slice of length `n`.
    #[inline]
    pub fn fiber(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.n + j) * self.n;
        &self.data[base..base + self.n]
    }

    /// The full slice `t[i][.][.]`, flattened `j*n + k` — the layout of a
    /// [`Tensor2`] over the last two indices.
    #[inline]
    pub fn slab(&self, i: usize) -> &[Scalar] {
        let nn = self.n * self.n;
        &self.data[i * nn..(i + 1) * nn]
    }

    pub(crate) fn set_slab(&mut self, i: usize, vals: &[Scalar]) {
        let nn = self.n * self.n;
        debug_assert_eq!(vals.len(), nn);
        self.data[i * nn..(i + 1) * nn].copy_from_slice(vals);
    }
}

/// One verified (or failed) axiom group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomCheck {
    /// One of: `associativity`, `unit`, `coassociativity`, `counit`,
    /// `bialgebra`, `antipode`.
    pub axiom: &'static str,
    pub pass: bool,
    /// Basis indices of the first failing tuple in lexicographic order;
    /// empty for failures of a global identity such as `Delta(1) = 1 (x) 1`.
    pub counterexample: Option<Vec<usize>>,
}

/// Outcome of [`HopfAlgebra::verify_axioms`]: all six axiom groups in a fixed
/// order. Deterministic: identical input yields an identical report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// One report object per axiom: `{"check", "pass", "details"}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.checks
                .iter()
                .map(|c| {
                    json!({
                        "check": c.axiom,
                        "pass": c.pass,
                        "details": { "counterexample": c.counterexample },
                    })
                })
                .collect(),
        )
    }
}

impl std::fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            if c.pass {
                writeln!(f, "{}: pass", c.axiom)?;
            } else {
                match &c.counterexample {
                    Some(t) if !t.is_empty() => {
                        writeln!(f, "{}: FAIL at basis tuple {:?}", c.axiom, t)?
                    }
                    _ => writeln!(f, "{}: FAIL", c.axiom)?,
                }
            }
        }
        Ok(())
    }
}

/// A finite-dimensional algebra-with-costructure in structure-constant form.
///
/// The name is aspirational until [`Self::verify_axioms`] says otherwise:
/// the type holds arbitrary tensors of the right shape.
#[derive(Clone, PartialEq, Debug)]
pub struct HopfAlgebra {
    pub(crate) field: FieldSpec,
    pub(crate) dim: usize,
    pub(crate) basis_labels: Vec<String>,
    pub(crate) mult: Tensor3,
    pub(crate) unit: Vec<Scalar>,
    pub(crate) comult: Tensor3,
    pub(crate) counit: Vec<Scalar>,
    pub(crate) antipode: Matrix,
}

impl HopfAlgebra {
    /// Assemble from raw parts, validating shapes and scalar membership.
    /// Axioms are *not* checked here; call [`Self::verify_axioms`].
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        field: FieldSpec,
        basis_labels: Vec<String>,
        mult: Tensor3,
        unit: Vec<Scalar>,
        comult: Tensor3,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if mult.n != dim || comult.n != dim {
            return Err(Error::InvalidAlgebra(format!(
                "tensor dimension mismatch: labels say {dim}, mult says {}, comult says {}",
                mult.n, comult.n
            )));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "unit/counit must have {dim} coordinates"
            )));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "antipode must be {dim}x{dim}, got {}x{}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        if antipode.field() != &field {
            return Err(Error::FieldMismatch(
                format!("{field}"),
                format!("{}", antipode.field()),
            ));
        }
        let check_all = |scalars: &[Scalar]| -> Result<()> {
            for s in scalars {
                field.arith(s, s, crate::field::FieldOp::Add)?;
            }
            Ok(())
        };
        check_all(&mult.data)?;
        check_all(&comult.data)?;
        check_all(&unit)?;
        check_all(&counit)?;
        Ok(HopfAlgebra {
            field,
            dim,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn mult_tensor(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn comult_tensor(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_coords(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    /// Structural equality of the tensors, ignoring basis labels.
    pub fn same_tensors(&self, other: &HopfAlgebra) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    // ---- elements -------------------------------------------------------

    pub fn zero_element(&self) -> Element {
        Element {
            coords: vec![self.field.zero(); self.dim],
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim);
        let mut e = self.zero_element();
        e.coords[i] = self.field.one();
        e
    }

    pub fn unit_element(&self) -> Element {
        Element {
            coords: self.unit.clone(),
        }
    }

    pub fn element_from_coords(&self, coords: Vec<Scalar>) -> Result<Element> {
        if coords.len() != self.dim {
            return Err(Error::CoordinateLength {
                expected: self.dim,
                got: coords.len(),
            });
        }
        for s in &coords {
            self.field.arith(s, s, crate::field::FieldOp::Add)?;
        }
        Ok(Element { coords })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        let f = &self.field;
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| f.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        let f = &self.field;
        Element {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| f.sub(x, y))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar, a: &Element) -> Element {
        let f = &self.field;
        Element {
            coords: a.coords.iter().map(|x| f.mul(c, x)).collect(),
        }
    }

    /// Render an element as a sum of `coeff·label` terms, e.g. `"g^1 + 2·x^0"`.
    pub fn element_string(&self, a: &Element) -> String {
        let f = &self.field;
        let one = f.one();
        let mut terms = Vec::new();
        for (i, c) in a.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.basis_labels[i];
            if *c == one {
                terms.push(label.clone());
            } else {
                terms.push(format!("{}·{}", f.scalar_string(c), label));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn counit_of(&self, a: &Element) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for (x, e) in a.coords.iter().zip(&self.counit) {
            if !x.is_zero() && !e.is_zero() {
                acc = f.add(&acc, &f.mul(x, e));
            }
        }
        acc
    }

    /// Apply the stored antipode: `S(sum v_i e_i) = sum v_i S(e_i)`.
    pub fn antipode_of(&self, a: &Element) -> Element {
        let f = &self.field;
        let mut out = self.zero_element();
        for (i, v) in a.coords.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let s = self.antipode[(i, j)];
                if !s.is_zero() {
                    out.coords[j] = f.add(&out.coords[j], &f.mul(v, &s));
                }
            }
        }
        out
    }

    // ---- products and coproducts ----------------------------------------

    fn mult_into(&self, a: &[Scalar], b: &[Scalar], out: &mut [Scalar]) {
        let f = &self.field;
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = f.mul(ai, bj);
                for (k, m) in self.mult.fiber(i, j).iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&c, m));
                    }
                }
            }
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        debug_assert_eq!(a.coords.len(), self.dim);
        debug_assert_eq!(b.coords.len(), self.dim);
        let mut out = self.zero_element();
        self.mult_into(&a.coords, &b.coords, &mut out.coords);
        out
    }

    /// `a^k` by repeated multiplication; `a^0 = 1`.
    pub fn power(&self, a: &Element, k: usize) -> Element {
        let mut acc = self.unit_element();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    pub fn comultiply(&self, a: &Element) -> Tensor2 {
        let f = &self.field;
        let n = self.dim;
        let mut out = Tensor2 {
            n,
            coords: vec![f.zero(); n * n],
        };
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let base = i * n * n;
            for jk in 0..n * n {
                let c = self.comult.data[base + jk];
                if !c.is_zero() {
                    out.coords[jk] = f.add(&out.coords[jk], &f.mul(ai, &c));
                }
            }
        }
        out
    }

    pub fn tensor_of(&self, a: &Element, b: &Element) -> Tensor2 {
        let f = &self.field;
        let n = self.dim;
        let mut out = Tensor2 {
            n,
            coords: vec![f.zero(); n * n],
        };
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                if !bj.is_zero() {
                    out.coords[i * n + j] = f.mul(ai, bj);
                }
            }
        }
        out
    }

    pub fn tensor2_add(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let f = &self.field;
        Tensor2 {
            n: s.n,
            coords: s
                .coords
                .iter()
                .zip(&t.coords)
                .map(|(x, y)| f.add(x, y))
                .collect(),
        }
    }

    pub fn tensor2_sub(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let f = &self.field;
        Tensor2 {
            n: s.n,
            coords: s
                .coords
                .iter()
                .zip(&t.coords)
                .map(|(x, y)| f.sub(x, y))
                .collect(),
        }
    }

    pub fn tensor2_scale(&self, c: &Scalar, t: &Tensor2) -> Tensor2 {
        let f = &self.field;
        Tensor2 {
            n: t.n,
            coords: t.coords.iter().map(|x| f.mul(c, x)).collect(),
        }
    }

    /// Componentwise product in `H (x) H`:
    /// `(a (x) b)(c (x) d) = ac (x) bd`, extended bilinearly.
    pub fn tensor2_multiply(&self, s: &Tensor2, t: &Tensor2) -> Tensor2 {
        let f = &self.field;
        let n = self.dim;
        debug_assert_eq!(s.n, n);
        debug_assert_eq!(t.n, n);
        let mut out = Tensor2 {
            n,
            coords: vec![f.zero(); n * n],
        };
        for (ab, sab) in s.coords.iter().enumerate() {
            if sab.is_zero() {
                continue;
            }
            let (a, b) = (ab / n, ab % n);
            for (cd, tcd) in t.coords.iter().enumerate() {
                if tcd.is_zero() {
                    continue;
                }
                let (c, d) = (cd / n, cd % n);
                let coef = f.mul(sab, tcd);
                let left = self.mult.fiber(a, c);
                let right = self.mult.fiber(b, d);
                for (j, lj) in left.iter().enumerate() {
                    if lj.is_zero() {
                        continue;
                    }
                    let cj = f.mul(&coef, lj);
                    let row = j * n;
                    for (k, rk) in right.iter().enumerate() {
                        if !rk.is_zero() {
                            out.coords[row + k] = f.add(&out.coords[row + k], &f.mul(&cj, rk));
                        }
                    }
                }
            }
        }
        out
    }

    /// `1 (x) 1` in `H (x) H`.
    pub fn tensor2_unit(&self) -> Tensor2 {
        self.tensor_of(&self.unit_element(), &self.unit_element())
    }

    /// `t^k` in `H (x) H`; `t^0 = 1 (x) 1`.
    pub fn tensor2_power(&self, t: &Tensor2, k: usize) -> Tensor2 {
        let mut acc = self.tensor2_unit();
        for _ in 0..k {
            acc = self.tensor2_multiply(&acc, t);
        }
        acc
    }

    // ---- axiom verification ----------------------------------------------

    /// Exhaustively check all Hopf axioms on basis tuples. Six checks in a
    /// fixed order, each reporting the first failing tuple in lexicographic
    /// order. Evaluation is sequential and fully deterministic.
    pub fn verify_axioms(&self) -> AxiomReport {
        let checks = vec![
            self.check_associativity(),
            self.check_unit(),
            self.check_coassociativity(),
            self.check_counit(),
            self.check_bialgebra(),
            self.check_antipode(),
        ];
        AxiomReport { checks }
    }

    fn check_associativity(&self) -> AxiomCheck {
        let n = self.dim;
        let mut left = vec![self.field.zero(); n];
        let mut right = vec![self.field.zero(); n];
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult.fiber(i, j).to_vec();
                for k in 0..n {
                    left.fill(self.field.zero());
                    right.fill(self.field.zero());
                    // (e_i e_j) e_k
                    let ek = self.basis_element(k);
                    self.mult_into(&ij, &ek.coords, &mut left);
                    // e_i (e_j e_k)
                    let jk = self.mult.fiber(j, k).to_vec();
                    let ei = self.basis_element(i);
                    self.mult_into(&ei.coords, &jk, &mut right);
                    if left != right {
                        return AxiomCheck {
                            axiom: "associativity",
                            pass: false,
                            counterexample: Some(vec![i, j, k]),
                        };
                    }
                }
            }
        }
        AxiomCheck {
            axiom: "associativity",
            pass: true,
            counterexample: None,
        }
    }

    fn check_unit(&self) -> AxiomCheck {
        let one = self.unit_element();
        for i in 0..self.dim {
            let ei = self.basis_element(i);
            if self.multiply(&one, &ei) != ei || self.multiply(&ei, &one) != ei {
                return AxiomCheck {
                    axiom: "unit",
                    pass: false,
                    counterexample: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            axiom: "unit",
            pass: true,
            counterexample: None,
        }
    }

    fn check_coassociativity(&self) -> AxiomCheck {
        let f = &self.field;
        let n = self.dim;
        let mut lhs = vec![f.zero(); n * n * n];
        let mut rhs = vec![f.zero(); n * n * n];
        for i in 0..n {
            lhs.fill(f.zero());
            rhs.fill(f.zero());
            for j in 0..n {
                for k in 0..n {
                    let c = self.comult.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    // (Delta (x) id): expand Delta(e_j) in the first two slots.
                    for a in 0..n {
                        for b in 0..n {
                            let d = self.comult.get(j, a, b);
                            if !d.is_zero() {
                                let idx = (a * n + b) * n + k;
                                lhs[idx] = f.add(&lhs[idx], &f.mul(&c, &d));
                            }
                        }
                    }
                    // (id (x) Delta): expand Delta(e_k) in the last two slots.
                    for a in 0..n {
                        for b in 0..n {
                            let d = self.comult.get(k, a, b);
                            if !d.is_zero() {
                                let idx = (j * n + a) * n + b;
                                rhs[idx] = f.add(&rhs[idx], &f.mul(&c, &d));
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return AxiomCheck {
                    axiom: "coassociativity",
                    pass: false,
                    counterexample: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            axiom: "coassociativity",
            pass: true,
            counterexample: None,
        }
    }

    fn check_counit(&self) -> AxiomCheck {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            let ei = self.basis_element(i);
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = self.comult.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    if !self.counit[j].is_zero() {
                        left[k] = f.add(&left[k], &f.mul(&c, &self.counit[j]));
                    }
                    if !self.counit[k].is_zero() {
                        right[j] = f.add(&right[j], &f.mul(&c, &self.counit[k]));
                    }
                }
            }
            if left != ei.coords || right != ei.coords {
                return AxiomCheck {
                    axiom: "counit",
                    pass: false,
                    counterexample: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            axiom: "counit",
            pass: true,
            counterexample: None,
        }
    }

    fn check_bialgebra(&self) -> AxiomCheck {
        let f = &self.field;
        // Delta and eps must be unital algebra maps.
        let one = self.unit_element();
        if self.comultiply(&one) != self.tensor2_unit() || self.counit_of(&one) != f.one() {
            return AxiomCheck {
                axiom: "bialgebra",
                pass: false,
                counterexample: Some(vec![]),
            };
        }
        for i in 0..self.dim {
            let di = self.comultiply(&self.basis_element(i));
            for j in 0..self.dim {
                let dj = self.comultiply(&self.basis_element(j));
                let prod = Element {
                    coords: self.mult.fiber(i, j).to_vec(),
                };
                if self.comultiply(&prod) != self.tensor2_multiply(&di, &dj)
                    || self.counit_of(&prod)
                        != f.mul(&self.counit[i], &self.counit[j])
                {
                    return AxiomCheck {
                        axiom: "bialgebra",
                        pass: false,
                        counterexample: Some(vec![i, j]),
                    };
                }
            }
        }
        AxiomCheck {
            axiom: "bialgebra",
            pass: true,
            counterexample: None,
        }
    }

    fn check_antipode(&self) -> AxiomCheck {
        let f = &self.field;
        let n = self.dim;
        for i in 0..n {
            let mut left = vec![f.zero(); n];
            let mut right = vec![f.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = self.comult.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    // m(S (x) id): S(e_j) * e_k.
                    let sj = Element {
                        coords: self.antipode.row(j).to_vec(),
                    };
                    let ek = self.basis_element(k);
                    let p = self.multiply(&sj, &ek);
                    for (m, v) in p.coords.iter().enumerate() {
                        if !v.is_zero() {
                            left[m] = f.add(&left[m], &f.mul(&c, v));
                        }
                    }
                    // m(id (x) S): e_j * S(e_k).
                    let ej = self.basis_element(j);
                    let sk = Element {
                        coords: self.antipode.row(k).to_vec(),
                    };
                    let p = self.multiply(&ej, &sk);
                    for (m, v) in p.coords.iter().enumerate() {
                        if !v.is_zero() {
                            right[m] = f.add(&right[m], &f.mul(&c, v));
                        }
                    }
                }
            }
            let target: Vec<Scalar> = self
                .unit
                .iter()
                .map(|u| f.mul(&self.counit[i], u))
                .collect();
            if left != target || right != target {
                return AxiomCheck {
                    axiom: "antipode",
                    pass: false,
                    counterexample: Some(vec![i]),
                };
            }
        }
        AxiomCheck {
            axiom: "antipode",
            pass: true,
            counterexample: None,
        }
    }

    // ---- antipode by convolution inversion --------------------------------

    /// Solve `sum S(e_i(1)) e_i(2) = eps(e_i) 1` for the matrix of `S`,
    /// ignoring the stored antipode. This is a plain linear system in the
    /// `n^2` matrix entries; it errors if the system is inconsistent (the
    /// bialgebra is not Hopf) or underdetermined (degenerate data). The
    /// two-sided antipode law is re-verified on the solution before it is
    /// returned.
    pub fn compute_antipode(&self) -> Result<Matrix> {
        let f = &self.field;
        let n = self.dim;
        let nn = n * n;
        // Unknowns x[j*n + l] = coefficient of e_l in S(e_j).
        // Row (i, m): sum_{j,l} (sum_k comult[i][j][k] * mult[l][k][m]) x[j][l]
        //           = eps(e_i) * unit_m.
        let mut sys = Matrix::zeros(f, nn, nn + 1);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.comult.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        for (m, v) in self.mult.fiber(l, k).iter().enumerate() {
                            if v.is_zero() {
                                continue;
                            }
                            let row = i * n + m;
                            let col = j * n + l;
                            let cur = sys[(row, col)];
                            sys.set(row, col, f.add(&cur, &f.mul(&c, v)));
                        }
                    }
                }
            }
            for m in 0..n {
                let rhs = f.mul(&self.counit[i], &self.unit[m]);
                sys.set(i * n + m, nn, rhs);
            }
        }
        let (r, pivots) = sys.rref();
        if pivots.contains(&nn) {
            return Err(Error::NoAntipode);
        }
        if pivots.len() < nn {
            return Err(Error::AntipodeNotUnique(nn - pivots.len()));
        }
        let mut s = Matrix::zeros(f, n, n);
        for (row, &col) in pivots.iter().enumerate() {
            s.set(col / n, col % n, r[(row, nn)]);
        }
        // The solve enforces the left law; confirm the right law too.
        let candidate = HopfAlgebra {
            antipode: s.clone(),
            ..self.clone()
        };
        if !candidate.check_antipode().pass {
            return Err(Error::NoAntipode);
        }
        Ok(s)
    }

    // ---- dual -------------------------------------------------------------

    /// The dual Hopf algebra on the dual basis: multiplication transposes
    /// comultiplication (`mult*[i][j][k] = comult[k][i][j]`), comultiplication
    /// transposes multiplication, unit and counit swap, and the antipode
    /// matrix is transposed.
    pub fn dual(&self) -> HopfAlgebra {
        let f = &self.field;
        let n = self.dim;
        let mut mult = Tensor3::zeros(f, n);
        let mut comult = Tensor3::zeros(f, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.set(i, j, k, self.comult.get(k, i, j));
                    comult.set(i, j, k, self.mult.get(j, k, i));
                }
            }
        }
        HopfAlgebra {
            field: f.clone(),
            dim: n,
            basis_labels: self
                .basis_labels
                .iter()
                .map(|l| format!("{l}*"))
                .collect(),
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
        }
    }

    // ---- basis changes -----------------------------------------------------

    /// Relabel the basis by a permutation: basis vector `i` becomes basis
    /// vector `perm[i]` of the result.
    pub fn permute_basis(&self, perm: &[usize]) -> Result<HopfAlgebra> {
        let n = self.dim;
        if perm.len() != n {
            return Err(Error::CoordinateLength {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidAlgebra("not a permutation".into()));
            }
            seen[p] = true;
        }
        let f = &self.field;
        let mut mult = Tensor3::zeros(f, n);
        let mut comult = Tensor3::zeros(f, n);
        let mut unit = vec![f.zero(); n];
        let mut counit = vec![f.zero(); n];
        let mut antipode = Matrix::zeros(f, n, n);
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            unit[perm[i]] = self.unit[i];
            counit[perm[i]] = self.counit[i];
            labels[perm[i]] = self.basis_labels[i].clone();
            for j in 0..n {
                antipode.set(perm[i], perm[j], self.antipode[(i, j)]);
                for k in 0..n {
                    mult.set(perm[i], perm[j], perm[k], self.mult.get(i, j, k));
                    comult.set(perm[i], perm[j], perm[k], self.comult.get(i, j, k));
                }
            }
        }
        Ok(HopfAlgebra {
            field: f.clone(),
            dim: n,
            basis_labels: labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    /// General change of basis: row `i` of `p` gives the coordinates of the
    /// new basis vector `e'_i` in the old basis. `p` must be invertible.
    pub fn change_basis(&self, p: &Matrix) -> Result<HopfAlgebra> {
        let n = self.dim;
        if p.rows() != n || p.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "change of basis must be {n}x{n}"
            )));
        }
        let q = p
            .inverse()
            .ok_or_else(|| Error::InvalidAlgebra("change of basis is singular".into()))?;
        // Old coordinates X relate to new coordinates Y by X = P^T Y, so
        // Y = Q^T X with Q = P^{-1}.
        let f = &self.field;
        let qt = q.transpose();
        let to_new = |x: &[Scalar]| -> Vec<Scalar> { qt.mul_vec(x) };
        let mut mult = Tensor3::zeros(f, n);
        let mut comult = Tensor3::zeros(f, n);
        let mut antipode = Matrix::zeros(f, n, n);
        for i in 0..n {
            let ei = Element {
                coords: p.row(i).to_vec(),
            };
            // Comultiplication: push Delta(e'_i) through Q (x) Q.
            let d = self.comultiply(&ei);
            let mut dm = Matrix::zeros(f, n, n);
            for a in 0..n {
                for b in 0..n {
                    dm.set(a, b, d.get(a, b));
                }
            }
            let new_d = qt.mul(&dm).mul(&q);
            for a in 0..n {
                for b in 0..n {
                    comult.set(i, a, b, new_d[(a, b)]);
                }
            }
            let s_old = self.antipode_of(&ei);
            for (c, v) in to_new(&s_old.coords).into_iter().enumerate() {
                antipode.set(i, c, v);
            }
            for j in 0..n {
                let ej = Element {
                    coords: p.row(j).to_vec(),
                };
                let prod = self.multiply(&ei, &ej);
                for (k, v) in to_new(&prod.coords).into_iter().enumerate() {
                    mult.set(i, j, k, v);
                }
            }
        }
        let unit = to_new(&self.unit);
        let counit: Vec<Scalar> = (0..n)
            .map(|i| {
                let ei = Element {
                    coords: p.row(i).to_vec(),
                };
                self.counit_of(&ei)
            })
            .collect();
        Ok(HopfAlgebra {
            field: f.clone(),
            dim: n,
            basis_labels: (0..n).map(|i| format!("b{i}")).collect(),
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    // ---- JSON --------------------------------------------------------------

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let n = self.dim;
        let s = |x: &Scalar| f.scalar_to_json(x);
        let vec_json = |v: &[Scalar]| Value::Array(v.iter().map(s).collect());
        let tensor_json = |t: &Tensor3| {
            Value::Array(
                (0..n)
                    .map(|i| {
                        Value::Array((0..n).map(|j| vec_json(t.fiber(i, j))).collect())
                    })
                    .collect(),
            )
        };
        let antipode = Value::Array(
            (0..n)
                .map(|i| vec_json(self.antipode.row(i)))
                .collect(),
        );
        json!({
            "field": f.to_json(),
            "dim": n,
            "basis_labels": self.basis_labels,
            "mult": tensor_json(&self.mult),
            "unit": vec_json(&self.unit),
            "comult": tensor_json(&self.comult),
            "counit": vec_json(&self.counit),
            "antipode": antipode,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serialization cannot fail")
    }

    /// Parse and shape-validate. Axioms are deliberately not checked here so
    /// that a broken file can be loaded and then *reported* as broken by
    /// [`Self::verify_axioms`].
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Json("algebra must be a JSON object".into()))?;
        let get = |k: &str| {
            obj.get(k)
                .ok_or_else(|| Error::Json(format!("missing key \"{k}\"")))
        };
        let field = FieldSpec::from_json(get("field")?)?;
        let dim = get("dim")?
            .as_u64()
            .ok_or_else(|| Error::Json("\"dim\" must be an integer".into()))? as usize;
        let basis_labels: Vec<String> = get("basis_labels")?
            .as_array()
            .ok_or_else(|| Error::Json("\"basis_labels\" must be an array".into()))?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Json("basis labels must be strings".into()))
            })
            .collect::<Result<_>>()?;
        if basis_labels.len() != dim {
            return Err(Error::Json(format!(
                "\"dim\" is {dim} but there are {} basis labels",
                basis_labels.len()
            )));
        }
        let parse_vec = |v: &Value, what: &str| -> Result<Vec<Scalar>> {
            let arr = v
                .as_array()
                .ok_or_else(|| Error::Json(format!("{what} must be an array")))?;
            if arr.len() != dim {
                return Err(Error::Json(format!(
                    "{what} must have {dim} entries, got {}",
                    arr.len()
                )));
            }
            arr.iter().map(|s| field.scalar_from_json(s)).collect()
        };
        let parse_tensor = |v: &Value, what: &str| -> Result<Tensor3> {
            let outer = v
                .as_array()
                .ok_or_else(|| Error::Json(format!("{what} must be an array")))?;
            if outer.len() != dim {
                return Err(Error::Json(format!(
                    "{what} must have {dim} slices, got {}",
                    outer.len()
                )));
            }
            let mut t = Tensor3::zeros(&field, dim);
            for (i, slice) in outer.iter().enumerate() {
                let rows = slice
                    .as_array()
                    .ok_or_else(|| Error::Json(format!("{what}[{i}] must be an array")))?;
                if rows.len() != dim {
                    return Err(Error::Json(format!(
                        "{what}[{i}] must have {dim} rows, got {}",
                        rows.len()
                    )));
                }
                for (j, row) in rows.iter().enumerate() {
                    let fiber = parse_vec(row, &format!("{what}[{i}][{j}]"))?;
                    for (k, s) in fiber.into_iter().enumerate() {
                        t.set(i, j, k, s);
                    }
                }
            }
            Ok(t)
        };
        let mult = parse_tensor(get("mult")?, "mult")?;
        let comult = parse_tensor(get("comult")?, "comult")?;
        let unit = parse_vec(get("unit")?, "unit")?;
        let counit = parse_vec(get("counit")?, "counit")?;
        let antipode_rows = get("antipode")?
            .as_array()
            .ok_or_else(|| Error::Json("\"antipode\" must be an array".into()))?;
        if antipode_rows.len() != dim {
            return Err(Error::Json(format!(
                "antipode must have {dim} rows, got {}",
                antipode_rows.len()
            )));
        }
        let mut antipode = Matrix::zeros(&field, dim, dim);
        for (i, row) in antipode_rows.iter().enumerate() {
            for (j, s) in parse_vec(row, &format!("antipode[{i}]"))?
                .into_iter()
                .enumerate()
            {
                antipode.set(i, j, s);
            }
        }
        HopfAlgebra::from_parts(field, basis_labels, mult, unit, comult, counit, antipode)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(s).map_err(|e| Error::Json(format!("parse error: {e}")))?;
        Self::from_json(&v)
    }
}
