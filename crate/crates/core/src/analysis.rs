//! Structural analysis of structure-constant Hopf algebras: the group of
//! grouplike elements, skew-primitive spaces, conjugation characters, the
//! coradical filtration, and a battery of named identity checks (quantum
//! binomials, twisted Frobenius powers, adjoint-action matrices).
//!
//! Everything is exact. Searches are deterministic: whenever a "first" or
//! "canonical" element is chosen, the order is the lexicographic order on
//! coordinate vectors induced by the canonical scalar order of the field.

use crate::families::{self, FamilyId, FamilyKind};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::{Element, HopfAlgebra};
use crate::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use serde_json::{json, Value};

/// Default ceiling on the number of vectors a brute-force grouplike scan may
/// enumerate. Overridable per call, or via `HOPF_BRUTEFORCE_CAP` in the CLI.
pub const DEFAULT_BRUTEFORCE_CAP: u64 = 100_000_000;

/// `Auto` mode never brute-forces more than this many vectors, even when the
/// cap would allow it; above the limit it falls back to scanning basis
/// vectors as candidates.
const AUTO_BRUTEFORCE_LIMIT: u128 = 2_000_000;

/// Outcome of one named structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Short human-readable note: the verified identity, or what failed.
    pub details: String,
}

impl Check {
    fn new(name: &str, pass: bool, details: String) -> Check {
        Check {
            name: name.to_string(),
            pass,
            details,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "check": self.name, "pass": self.pass, "details": self.details })
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn checks_to_json(checks: &[Check]) -> Value {
    Value::Array(checks.iter().map(Check::to_json).collect())
}

// ---- grouplike elements ---------------------------------------------------

/// How [`grouplikes`] searches for solutions of `Δv = v ⊗ v`, `ε(v) = 1`.
#[derive(Clone, Debug)]
pub enum GrouplikeMode {
    /// Enumerate all `q^n` vectors; refuse if that count exceeds `cap`.
    /// The result is certified complete.
    BruteForce { cap: u64 },
    /// Check a caller-supplied candidate list and assemble the group from
    /// exactly those elements. Completeness is the caller's responsibility
    /// and the result is marked incomplete.
    Verify { candidates: Vec<Element> },
    /// Brute-force when `q^n` is small enough, otherwise scan the basis
    /// vectors as candidates (which finds every grouplike of the bundled
    /// family constructors, but is not a completeness proof).
    Auto { cap: u64 },
}

impl Default for GrouplikeMode {
    fn default() -> Self {
        GrouplikeMode::Auto {
            cap: DEFAULT_BRUTEFORCE_CAP,
        }
    }
}

/// The group `G(H)` of grouplike elements, with its multiplication table.
///
/// Elements are stored in canonical order (lexicographic on coordinate
/// ranks), so two runs over the same algebra produce identical tables.
#[derive(Clone, Debug)]
pub struct GrouplikeGroup {
    elements: Vec<Element>,
    /// `table[i][j]` = index of `elements[i] * elements[j]`.
    table: Vec<Vec<usize>>,
    identity: usize,
    complete: bool,
}

impl GrouplikeGroup {
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    /// `true` iff the element list came from an exhaustive search.
    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn index_of(&self, v: &Element) -> Option<usize> {
        self.elements.iter().position(|e| e == v)
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.table[i]
            .iter()
            .position(|&k| k == self.identity)
            .expect("group table has an inverse in every row")
    }

    pub fn order_of(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != self.identity {
            cur = self.table[cur][i];
            k += 1;
            debug_assert!(k <= self.elements.len(), "order exceeds group size");
        }
        k
    }

    pub fn orders(&self) -> Vec<usize> {
        (0..self.elements.len()).map(|i| self.order_of(i)).collect()
    }

    /// Exponent of the group: the lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.orders().into_iter().fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.elements.len();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// The span of the grouplikes: the degree-zero term of the coradical
    /// filtration of a pointed Hopf algebra.
    pub fn span(&self, h: &HopfAlgebra) -> Subspace {
        Subspace::from_rows(
            h.field(),
            h.dim(),
            self.elements.iter().map(|e| e.coords.clone()).collect(),
        )
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Test `Δv = v ⊗ v` and `ε(v) = 1`.
pub fn is_grouplike(h: &HopfAlgebra, v: &Element) -> bool {
    v.coords.len() == h.dim()
        && h.counit_of(v) == h.field().one()
        && h.comultiply(v) == h.tensor_of(v, v)
}

/// Enumerate every vector of `k^n` and keep the grouplikes. The coproduct is
/// consulted column by column in lexicographic `(a, b)` order, so almost all
/// candidates die on the first column; the counit normalization is checked
/// last.
fn bruteforce_scan(h: &HopfAlgebra) -> Vec<Element> {
    let f = h.field();
    let n = h.dim();
    let q = f.order();
    let ct = h.comult_tensor();
    let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n * n];
    for i in 0..n {
        for a in 0..n {
            for b in 0..n {
                let c = ct.get(i, a, b);
                if !c.is_zero() {
                    cols[a * n + b].push((i, c));
                }
            }
        }
    }
    let counit = h.counit_coords();
    let mut out = Vec::new();

    if f.degree() == 1 {
        // Prime field: a scalar is a single residue and its canonical rank is
        // itself, so the odometer can run on raw `u64` values.
        let ucols: Vec<Vec<(usize, u64)>> = cols
            .iter()
            .map(|col| col.iter().map(|&(i, c)| (i, c.coeffs()[0])).collect())
            .collect();
        let ueps: Vec<u64> = counit.iter().map(|c| c.coeffs()[0]).collect();
        let mut v = vec![0u64; n];
        loop {
            let mut ok = true;
            for (ab, col) in ucols.iter().enumerate() {
                let mut s = 0u64;
                for &(i, c) in col {
                    if v[i] != 0 {
                        s = f.base_add(s, f.base_mul(c, v[i]));
                    }
                }
                if s != f.base_mul(v[ab / n], v[ab % n]) {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut e = 0u64;
                for i in 0..n {
                    if v[i] != 0 && ueps[i] != 0 {
                        e = f.base_add(e, f.base_mul(ueps[i], v[i]));
                    }
                }
                if e == 1 {
                    out.push(Element {
                        coords: v.iter().map(|&x| f.from_int(x)).collect(),
                    });
                }
            }
            if !advance_odometer(&mut v, q) {
                break;
            }
        }
    } else {
        let lut: Vec<Scalar> = f.enumerate().collect();
        let mut r = vec![0u64; n];
        loop {
            let mut ok = true;
            for (ab, col) in cols.iter().enumerate() {
                let mut s = f.zero();
                for &(i, c) in col {
                    if r[i] != 0 {
                        s = f.add(&s, &f.mul(&c, &lut[r[i] as usize]));
                    }
                }
                if s != f.mul(&lut[r[ab / n] as usize], &lut[r[ab % n] as usize]) {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut e = f.zero();
                for i in 0..n {
                    if r[i] != 0 {
                        e = f.add(&e, &f.mul(&counit[i], &lut[r[i] as usize]));
                    }
                }
                if e == f.one() {
                    out.push(Element {
                        coords: r.iter().map(|&k| lut[k as usize]).collect(),
                    });
                }
            }
            if !advance_odometer(&mut r, q) {
                break;
            }
        }
    }
    out
}

/// Increment a base-`q` odometer (last digit fastest); `false` on wraparound.
fn advance_odometer(digits: &mut [u64], q: u64) -> bool {
    let mut pos = digits.len();
    while pos > 0 {
        pos -= 1;
        digits[pos] += 1;
        if digits[pos] < q {
            return true;
        }
        digits[pos] = 0;
    }
    false
}

/// Find the grouplike elements of `h` and assemble them into a group.
///
/// Whatever the search mode, the returned set is validated: every element
/// satisfies the grouplike equations, the unit is present, the set is closed
/// under multiplication with inverses, the elements are linearly independent,
/// and their count divides `dim H`.
pub fn grouplikes(h: &HopfAlgebra, mode: &GrouplikeMode) -> Result<GrouplikeGroup> {
    let n = h.dim();
    let space = (h.field().order() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    let (found, complete) = match mode {
        GrouplikeMode::BruteForce { cap } => {
            if space > *cap as u128 {
                return Err(Error::BruteForceCapExceeded {
                    needed: space,
                    cap: *cap,
                });
            }
            (bruteforce_scan(h), true)
        }
        GrouplikeMode::Verify { candidates } => {
            let mut list = Vec::new();
            for v in candidates {
                if v.coords.len() != n {
                    return Err(Error::CoordinateLength {
                        expected: n,
                        got: v.coords.len(),
                    });
                }
                if !is_grouplike(h, v) {
                    return Err(Error::NotGrouplike(h.element_string(v)));
                }
                list.push(v.clone());
            }
            (list, false)
        }
        GrouplikeMode::Auto { cap } => {
            if space <= AUTO_BRUTEFORCE_LIMIT.min(*cap as u128) {
                (bruteforce_scan(h), true)
            } else {
                let list = (0..n)
                    .map(|i| h.basis_element(i))
                    .filter(|v| is_grouplike(h, v))
                    .collect();
                (list, false)
            }
        }
    };
    assemble_group(h, found, complete)
}

fn assemble_group(h: &HopfAlgebra, mut found: Vec<Element>, complete: bool) -> Result<GrouplikeGroup> {
    let f = h.field();
    found.sort_by(|a, b| {
        let ra = a.coords.iter().map(|s| f.rank_of(s));
        let rb = b.coords.iter().map(|s| f.rank_of(s));
        ra.cmp(rb)
    });
    found.dedup();

    let unit = h.unit_element();
    let identity = found
        .iter()
        .position(|e| *e == unit)
        .ok_or_else(|| Error::NotAGroup("the unit is not among the candidates".to_string()))?;

    let m = found.len();
    let mut table = vec![vec![0usize; m]; m];
    for i in 0..m {
        for j in 0..m {
            let prod = h.multiply(&found[i], &found[j]);
            table[i][j] = found.iter().position(|e| *e == prod).ok_or_else(|| {
                Error::NotAGroup(format!(
                    "not closed under multiplication: ({}) · ({}) = {} is outside the set",
                    h.element_string(&found[i]),
                    h.element_string(&found[j]),
                    h.element_string(&prod)
                ))
            })?;
        }
    }
    for (i, row) in table.iter().enumerate() {
        if !row.contains(&identity) {
            return Err(Error::NotAGroup(format!(
                "no inverse for {}",
                h.element_string(&found[i])
            )));
        }
    }

    let rank = Matrix::from_rows(f, found.iter().map(|e| e.coords.clone()).collect()).rank();
    if rank != m {
        return Err(Error::NotAGroup(
            "the grouplike candidates are linearly dependent".to_string(),
        ));
    }
    if m == 0 || h.dim() % m != 0 {
        return Err(Error::GrouplikeCountDoesNotDivideDim {
            n_grouplikes: m,
            dim: h.dim(),
        });
    }

    Ok(GrouplikeGroup {
        elements: found,
        table,
        identity,
        complete,
    })
}

// ---- skew-primitive spaces ------------------------------------------------

/// The space `P_{g,k} = { x : Δx = x ⊗ g + k ⊗ x }` for grouplikes `g`, `k`,
/// returned as a canonical subspace of `k^n`. It always contains `g - k`.
pub fn skew_primitives(h: &HopfAlgebra, g: &Element, k: &Element) -> Result<Subspace> {
    for v in [g, k] {
        if !is_grouplike(h, v) {
            return Err(Error::NotGrouplike(h.element_string(v)));
        }
    }
    let f = h.field();
    let n = h.dim();
    let ct = h.comult_tensor();
    // Row (a, b) of the constraint matrix says: coefficient of e_a ⊗ e_b in
    // Δx - x ⊗ g - k ⊗ x vanishes.
    let m = Matrix::from_fn(f, n * n, n, |row, i| {
        let (a, b) = (row / n, row % n);
        let mut v = ct.get(i, a, b);
        if i == a {
            v = f.sub(&v, &g.coords[b]);
        }
        if i == b {
            v = f.sub(&v, &k.coords[a]);
        }
        v
    });
    Ok(m.kernel())
}

// ---- conjugation characters -----------------------------------------------

/// How grouplikes act on a skew-primitive witness by conjugation: either an
/// eigenvalue for every grouplike (multiplicative values, semisimple case) or
/// a defect coefficient along the line through `g - k` (additive values).
#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationCharacter {
    /// `true` when the values are additive defect coefficients.
    pub additive: bool,
    pub witness: Element,
    /// One value per group element, indexed like `GrouplikeGroup::elements`.
    pub values: Vec<Scalar>,
}

fn conjugate(h: &HopfAlgebra, f_el: &Element, f_inv: &Element, v: &Element) -> Element {
    h.multiply(&h.multiply(f_el, v), f_inv)
}

/// Whether conjugation data on skew-primitives is additive for this group:
/// exactly when the group order is divisible by the characteristic (the
/// non-semisimple case).
fn additive_regime(h: &HopfAlgebra, g_like: &GrouplikeGroup) -> bool {
    (g_like.len() as u64) % h.field().characteristic() == 0
}

/// Deterministically pick a witness in `P_{g,k}` whose conjugation data is a
/// character: the first vector (canonical coordinate order over the canonical
/// basis of `P_{g,k}`) that is an eigenvector of every conjugation (or whose
/// defects all lie on the line through `g - k`), excluding the line itself.
pub fn canonical_character_witness(
    h: &HopfAlgebra,
    g_like: &GrouplikeGroup,
    g: &Element,
    k: &Element,
) -> Result<Element> {
    let f = h.field();
    let p_space = skew_primitives(h, g, k)?;
    let additive = additive_regime(h, g_like);
    if additive && g == k {
        return Err(Error::AdditiveCharacterNeedsDistinctPair);
    }
    let dir = h.sub(g, k);
    let line = Subspace::from_rows(f, h.dim(), vec![dir.coords.clone()]);
    let inverses: Vec<Element> = (0..g_like.len())
        .map(|i| g_like.elements()[g_like.inverse_of(i)].clone())
        .collect();

    let d = p_space.dim();
    let rows: Vec<Element> = p_space
        .basis_rows()
        .map(|r| Element { coords: r.to_vec() })
        .collect();
    let lut: Vec<Scalar> = f.enumerate().collect();
    let mut digits = vec![0u64; d];
    while advance_odometer(&mut digits, f.order()) {
        let mut v = h.zero_element();
        for (r, &dig) in rows.iter().zip(&digits) {
            if dig != 0 {
                v = h.add(&v, &h.scale(&lut[dig as usize], r));
            }
        }
        if line.contains_vec(&v.coords) {
            continue;
        }
        let valid = g_like.elements().iter().zip(&inverses).all(|(fe, fi)| {
            let w = conjugate(h, fe, fi, &v);
            if additive {
                line.contains_vec(&h.sub(&w, &v).coords)
            } else {
                eigenvalue_of(f, &v, &w).is_some()
            }
        });
        if valid {
            return Ok(v);
        }
    }
    Err(Error::NoCharacterWitness)
}

/// If `w = λ v`, return `λ`.
fn eigenvalue_of(f: &FieldSpec, v: &Element, w: &Element) -> Option<Scalar> {
    let i = v.coords.iter().position(|c| !c.is_zero())?;
    let lambda = f.div(&w.coords[i], &v.coords[i]).ok()?;
    let same = v
        .coords
        .iter()
        .zip(&w.coords)
        .all(|(a, b)| f.mul(&lambda, a) == *b);
    if same {
        Some(lambda)
    } else {
        None
    }
}

/// Extract the conjugation character of a witness `x ∈ P_{g,k}`.
///
/// In the semisimple regime each grouplike `f` satisfies `f x f⁻¹ = χ(f) x`
/// and the multiplicative values `χ(f)` are returned. Otherwise conjugation
/// moves `x` along the line through `g - k`, and the additive values solve
/// `f x f⁻¹ - x = ρ(f) · (k - g)`; this orientation gives the witness of the
/// relation `gx - xg = g(g - 1)` the value `ρ(g) = +1`.
pub fn conjugation_character(
    h: &HopfAlgebra,
    g_like: &GrouplikeGroup,
    g: &Element,
    k: &Element,
    witness: &Element,
) -> Result<ConjugationCharacter> {
    let f = h.field();
    let p_space = skew_primitives(h, g, k)?;
    if !p_space.contains_vec(&witness.coords) {
        return Err(Error::InvalidAlgebra(format!(
            "the witness {} is not ({}, {})-skew-primitive",
            h.element_string(witness),
            h.element_string(g),
            h.element_string(k)
        )));
    }
    let dir = h.sub(g, k);
    let line = Subspace::from_rows(f, h.dim(), vec![dir.coords.clone()]);
    if line.contains_vec(&witness.coords) {
        return Err(Error::InvalidAlgebra(
            "the witness lies on the line through g - k and carries no character".to_string(),
        ));
    }
    let additive = additive_regime(h, g_like);
    let mut values = Vec::with_capacity(g_like.len());
    if additive {
        if g == k {
            return Err(Error::AdditiveCharacterNeedsDistinctPair);
        }
        let neg_dir = h.sub(k, g);
        let pivot = neg_dir
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("g != k so the direction is nonzero");
        for i in 0..g_like.len() {
            let fe = &g_like.elements()[i];
            let fi = &g_like.elements()[g_like.inverse_of(i)];
            let defect = h.sub(&conjugate(h, fe, fi, witness), witness);
            let c = f.div(&defect.coords[pivot], &neg_dir.coords[pivot])?;
            if h.sub(&defect, &h.scale(&c, &neg_dir)) != h.zero_element() {
                return Err(Error::NotACharacterWitness {
                    defect: h.element_string(&defect),
                });
            }
            values.push(c);
        }
    } else {
        for i in 0..g_like.len() {
            let fe = &g_like.elements()[i];
            let fi = &g_like.elements()[g_like.inverse_of(i)];
            let w = conjugate(h, fe, fi, witness);
            match eigenvalue_of(f, witness, &w) {
                Some(lambda) => values.push(lambda),
                None => {
                    return Err(Error::NotACharacterWitness {
                        defect: h.element_string(&h.sub(&w, witness)),
                    });
                }
            }
        }
    }
    Ok(ConjugationCharacter {
        additive,
        witness: witness.clone(),
        values,
    })
}

/// Verify the character laws on the whole group table: multiplicative values
/// satisfy `χ(fg) = χ(f)χ(g)` with `χ(1) = 1`; additive values satisfy
/// `ρ(fg) = ρ(f) + ρ(g)` with `ρ(1) = 0`.
pub fn character_laws_hold(
    h: &HopfAlgebra,
    g_like: &GrouplikeGroup,
    ch: &ConjugationCharacter,
) -> bool {
    let f = h.field();
    let n = g_like.len();
    if ch.values.len() != n {
        return false;
    }
    let id_ok = if ch.additive {
        ch.values[g_like.identity_index()].is_zero()
    } else {
        ch.values[g_like.identity_index()] == f.one()
    };
    id_ok
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let prod = g_like.table()[i][j];
                let combined = if ch.additive {
                    f.add(&ch.values[i], &ch.values[j])
                } else {
                    f.mul(&ch.values[i], &ch.values[j])
                };
                ch.values[prod] == combined
            })
        })
}

// ---- coradical filtration ---------------------------------------------------

/// The chain `H_0 ⊆ H_1 ⊆ ... ⊆ H_s = H` produced by [`coradical_filtration`].
#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub levels: Vec<Subspace>,
    pub dims: Vec<usize>,
    /// Index `s` of the first level that fills the whole algebra.
    pub stabilization_index: usize,
}

/// Compute the coradical filtration of a pointed Hopf algebra, taking the
/// span of the given grouplikes as `H_0` and iterating
/// `H_n = Δ⁻¹(H_0 ⊗ H + H ⊗ H_{n-1})` until the whole algebra is reached.
///
/// If a step adds nothing while the algebra is not yet exhausted, the input
/// is not generated this way (not pointed with coradical `span G`, or the
/// grouplike list is too small) and `FiltrationStalled` is returned.
pub fn coradical_filtration(
    h: &HopfAlgebra,
    g_like: &GrouplikeGroup,
) -> Result<FiltrationReport> {
    let f = h.field().clone();
    let n = h.dim();
    let h0 = g_like.span(h);
    let mut levels = vec![h0];
    let mut dims = vec![levels[0].dim()];

    let slabs: Vec<Matrix> = (0..n)
        .map(|i| Matrix::from_fn(&f, n, n, |a, b| h.comult_tensor().get(i, a, b)))
        .collect();
    let q0 = levels[0].quotient_map();

    while *dims.last().unwrap() < n {
        let prev = levels.last().unwrap();
        let qp_t = prev.quotient_map().transpose();
        let m0 = q0.rows();
        let m1 = qp_t.cols();
        // The map v ↦ (Q_0 ⊗ Q_{n-1}) Δv, flattened row-major over (r, s).
        let mut rows = vec![vec![f.zero(); n]; m0 * m1];
        for (i, slab) in slabs.iter().enumerate() {
            let a = q0.mul(slab).mul(&qp_t);
            for r in 0..m0 {
                for s in 0..m1 {
                    rows[r * m1 + s][i] = a[(r, s)];
                }
            }
        }
        let next = Matrix::from_rows(&f, rows).kernel();
        debug_assert!(next.contains(prev).unwrap_or(false));
        if next.dim() <= prev.dim() {
            return Err(Error::FiltrationStalled {
                reached: prev.dim(),
                dim: n,
            });
        }
        dims.push(next.dim());
        levels.push(next);
    }

    Ok(FiltrationReport {
        stabilization_index: levels.len() - 1,
        levels,
        dims,
    })
}

/// Check that the coproduct respects the filtration:
/// `Δ(H_n) ⊆ Σ_{i} H_i ⊗ H_{n-i}` for every level `n`.
pub fn filtration_compatibility(h: &HopfAlgebra, filt: &FiltrationReport) -> Check {
    let f = h.field();
    let n = h.dim();
    for (lvl, space) in filt.levels.iter().enumerate() {
        // Assemble Σ H_i ⊗ H_{lvl-i} inside k^(n²).
        let mut rows = Vec::new();
        for i in 0..=lvl {
            let left = &filt.levels[i.min(filt.levels.len() - 1)];
            let right = &filt.levels[(lvl - i).min(filt.levels.len() - 1)];
            for a in left.basis_rows() {
                for b in right.basis_rows() {
                    let mut row = vec![f.zero(); n * n];
                    for (ia, va) in a.iter().enumerate() {
                        if va.is_zero() {
                            continue;
                        }
                        for (ib, vb) in b.iter().enumerate() {
                            if !vb.is_zero() {
                                row[ia * n + ib] = f.mul(va, vb);
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let target = Subspace::from_rows(f, n * n, rows);
        for v in space.basis_rows() {
            let t = h.comultiply(&Element { coords: v.to_vec() });
            if !target.contains_vec(&t.coords) {
                return Check::new(
                    "filtration-compatibility",
                    false,
                    format!("Δ maps a vector of level {lvl} outside Σ H_i ⊗ H_({lvl}-i)"),
                );
            }
        }
    }
    Check::new(
        "filtration-compatibility",
        true,
        format!(
            "Δ(H_n) ⊆ Σ H_i ⊗ H_(n-i) for all {} levels",
            filt.levels.len()
        ),
    )
}

/// Degree-one structure check for pointed Hopf algebras: `H_1` must equal
/// `H_0 + Σ P_{g,k}` over all ordered grouplike pairs, and its dimension must
/// be `dim H_0` plus the sum of the quotient dimensions `P_{g,k} / H_0`.
pub fn taft_wilson_check(
    h: &HopfAlgebra,
    g_like: &GrouplikeGroup,
    filt: &FiltrationReport,
) -> Result<Check> {
    let h0 = &filt.levels[0];
    let h1 = if filt.levels.len() > 1 {
        &filt.levels[1]
    } else {
        &filt.levels[0]
    };
    let mut sum = h0.clone();
    let mut total = 0usize;
    for g in g_like.elements() {
        for k in g_like.elements() {
            let p = skew_primitives(h, g, k)?;
            total += p.quotient_dim(h0)?;
            sum = sum.sum(&p)?;
        }
    }
    let dims_ok = h1.dim() == h0.dim() + total;
    let span_ok = sum == *h1;
    Ok(Check::new(
        "taft-wilson-degree-one",
        dims_ok && span_ok,
        format!(
            "dim H_1 = {}, dim H_0 = {}, sum of skew quotients = {}, spans match: {}",
            h1.dim(),
            h0.dim(),
            total,
            span_ok
        ),
    ))
}

// ---- quantum binomials ------------------------------------------------------

/// The quantum binomial coefficient `(n choose i)_ω`, computed by the
/// twisted Pascal recurrence
/// `(n i)_ω = (n-1 i)_ω + ω^(n-i) (n-1 i-1)_ω`, which needs no division and
/// is valid for every ω including ω = 1 (where it gives ordinary binomials).
pub fn quantum_binomial(f: &FieldSpec, n: u64, i: u64, omega: &Scalar) -> Scalar {
    if i > n {
        return f.zero();
    }
    let mut row = vec![f.one()];
    for m in 1..=n as usize {
        let mut next = vec![f.zero(); m + 1];
        next[0] = f.one();
        next[m] = f.one();
        for j in 1..m {
            let twist = f.pow(omega, (m - j) as u64);
            next[j] = f.add(&row[j], &f.mul(&twist, &row[j - 1]));
        }
        row = next;
    }
    row[i as usize]
}

/// The same coefficient from quantum factorials
/// `[n]_ω! / ([i]_ω! [n-i]_ω!)` with `[j]_ω = 1 + ω + ... + ω^(j-1)`.
/// Returns `None` when the denominator vanishes (the factorial form breaks
/// down exactly where the Pascal form keeps working).
pub fn quantum_binomial_factorial(
    f: &FieldSpec,
    n: u64,
    i: u64,
    omega: &Scalar,
) -> Option<Scalar> {
    if i > n {
        return Some(f.zero());
    }
    let bracket = |j: u64| {
        let mut s = f.zero();
        let mut t = f.one();
        for _ in 0..j {
            s = f.add(&s, &t);
            t = f.mul(&t, omega);
        }
        s
    };
    let factorial = |j: u64| (1..=j).fold(f.one(), |acc, l| f.mul(&acc, &bracket(l)));
    let den = f.mul(&factorial(i), &factorial(n - i));
    if den.is_zero() {
        return None;
    }
    Some(f.div(&factorial(n), &den).expect("nonzero denominator"))
}

// ---- family-specific identity batteries -------------------------------------

/// For a `taft` instance: verify the twisted-binomial mechanism that makes
/// `x^p` a skew-primitive killer. With `A = x ⊗ 1` and `B = g ⊗ x` inside
/// `H ⊗ H`, checks `BA = ω AB`, the vanishing `(p i)_ω = 0` for `0 < i < p`,
/// the twisted Frobenius identity `(A + B)^p = A^p + B^p`, and that
/// `Δ(x^p) = x^p ⊗ 1 + 1 ⊗ x^p`. Two negative controls make sure the
/// vanishing is really ω's doing: ordinary binomials `(p i)_1` stay nonzero
/// here (the field characteristic is not p), and the commuting pair
/// `A, 1 ⊗ x` fails the additive power law.
pub fn frobenius_binomial_identity(id: &FamilyId, h: &HopfAlgebra) -> Result<Vec<Check>> {
    if id.kind() != FamilyKind::Taft {
        return Err(Error::InvalidFamily(format!(
            "the twisted binomial battery applies to taft instances, not {}",
            id.display_name()
        )));
    }
    let f = h.field();
    let p = id.p();
    let omega = *id.omega().expect("taft instances carry omega");
    let gens = families::generators(id, h);
    let (g, x) = (&gens[0], &gens[1]);
    let u = h.unit_element();

    let a = h.tensor_of(x, &u);
    let b = h.tensor_of(g, x);
    let mut checks = Vec::new();

    let ba = h.tensor2_multiply(&b, &a);
    let ab = h.tensor2_multiply(&a, &b);
    checks.push(Check::new(
        "q-commutation",
        ba == h.tensor2_scale(&omega, &ab),
        format!("(g⊗x)(x⊗1) = ω (x⊗1)(g⊗x) with ω = {}", f.scalar_string(&omega)),
    ));

    let vanish = (1..p).all(|i| quantum_binomial(f, p, i, &omega).is_zero());
    checks.push(Check::new(
        "binomial-vanishing",
        vanish,
        format!("(p i)_ω = 0 for 0 < i < {p}"),
    ));

    let lhs = h.tensor2_power(&h.tensor2_add(&a, &b), p as usize);
    let rhs = h.tensor2_add(
        &h.tensor2_power(&a, p as usize),
        &h.tensor2_power(&b, p as usize),
    );
    checks.push(Check::new(
        "twisted-additive-power",
        lhs == rhs,
        format!("(A + B)^{p} = A^{p} + B^{p} for the ω-commuting pair"),
    ));

    let xp = h.power(x, p as usize);
    let prim = h.tensor2_add(&h.tensor_of(&xp, &u), &h.tensor_of(&u, &xp));
    checks.push(Check::new(
        "p-power-primitive",
        h.comultiply(&xp) == prim,
        format!("Δ(x^{p}) = x^{p} ⊗ 1 + 1 ⊗ x^{p}"),
    ));

    let one = f.one();
    let classical = (1..p).all(|i| !quantum_binomial(f, p, i, &one).is_zero());
    checks.push(Check::new(
        "classical-binomial-control",
        classical,
        format!(
            "(p i)_1 ≠ 0 for 0 < i < {p} in characteristic {}",
            f.characteristic()
        ),
    ));

    let b_comm = h.tensor_of(&u, x);
    let lhs_c = h.tensor2_power(&h.tensor2_add(&a, &b_comm), p as usize);
    let rhs_c = h.tensor2_add(
        &h.tensor2_power(&a, p as usize),
        &h.tensor2_power(&b_comm, p as usize),
    );
    checks.push(Check::new(
        "commuting-pair-control",
        lhs_c != rhs_c,
        "the commuting pair A, 1⊗x must fail the additive power law".to_string(),
    ));

    Ok(checks)
}

/// Iterated adjoint action `(ad x)^k (y)` with `ad x (y) = xy - yx`.
pub fn ad_power(h: &HopfAlgebra, x: &Element, y: &Element, k: usize) -> Element {
    let mut cur = y.clone();
    for _ in 0..k {
        cur = h.sub(&h.multiply(x, &cur), &h.multiply(&cur, x));
    }
    cur
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u128; (n + 1) as usize];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..row.len()).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k as usize]
}

/// Explicit matrix model, over `F_p`, of the adjoint action of `x` on the
/// group-algebra part `span{1, g, ..., g^(p-1)}` of the family with relation
/// `gx - xg = g(g - 1)`:
///
/// * `T`, the matrix with `ad x (g^j) = j g^j - j g^(j+1)` down column `j`;
/// * a change of basis `P` (with inverse) built from signed binomials.
///
/// The checks verify `P P⁻¹ = 1`, `P T P⁻¹ = diag(0, 1, ..., p-1)`,
/// the rank-one defect `T^(p-1) = 1 - P⁻¹ E_00 P`, that `T` matches the
/// adjoint action computed in the built algebra, and the stabilized action
/// `(ad x)^(p-1)(g) = g - 1`.
pub fn adjoint_matrix_identity(p: u64) -> Result<Vec<Check>> {
    let f = FieldSpec::prime(p)?;
    let n = p as usize;
    let bin = |r: u64, c: u64| f.from_int((binomial_u128(r, c) % p as u128) as u64);

    let t = Matrix::from_fn(&f, n, n, |r, c| {
        if r == c {
            f.from_int(c as u64)
        } else if r == (c + 1) % n {
            f.neg(&f.from_int(c as u64))
        } else {
            f.zero()
        }
    });
    let p_mat = Matrix::from_fn(&f, n, n, |r, c| {
        if r == 0 {
            f.one()
        } else if c == 0 {
            f.zero()
        } else {
            let v = bin(r as u64 - 1, c as u64 - 1);
            if (r + c) % 2 == 1 {
                f.neg(&v)
            } else {
                v
            }
        }
    });
    let p_inv = Matrix::from_fn(&f, n, n, |r, c| {
        if r == 0 {
            if c == 0 {
                f.one()
            } else {
                f.neg(&bin(p - 1, c as u64))
            }
        } else if c == 0 {
            f.zero()
        } else {
            bin(r as u64 - 1, c as u64 - 1)
        }
    });

    let mut checks = Vec::new();
    checks.push(Check::new(
        "inverse-pair",
        p_mat.mul(&p_inv).is_identity() && p_inv.mul(&p_mat).is_identity(),
        "P P⁻¹ = P⁻¹ P = 1".to_string(),
    ));

    let diag = Matrix::from_fn(&f, n, n, |r, c| {
        if r == c {
            f.from_int(r as u64)
        } else {
            f.zero()
        }
    });
    checks.push(Check::new(
        "diagonalization",
        p_mat.mul(&t).mul(&p_inv) == diag,
        format!("P T P⁻¹ = diag(0, 1, ..., {})", p - 1),
    ));

    let mut t_pow = t.clone();
    for _ in 1..(p - 1) {
        t_pow = t_pow.mul(&t);
    }
    let mut e00 = Matrix::zeros(&f, n, n);
    e00.set(0, 0, f.one());
    let expected = Matrix::identity(&f, n).sub(&p_inv.mul(&e00).mul(&p_mat));
    checks.push(Check::new(
        "power-defect",
        t_pow == expected,
        format!("T^{} = 1 - P⁻¹ E_00 P", p - 1),
    ));

    let id = FamilyId::char_p(FamilyKind::B4, p)?;
    let h = families::build(&id)?;
    let gens = families::generators(&id, &h);
    let (g, x) = (&gens[0], &gens[1]);
    let mut action_ok = true;
    for j in 0..n {
        let gj = h.basis_element(j * n);
        let adx = ad_power(&h, x, &gj, 1);
        for (idx, coord) in adx.coords.iter().enumerate() {
            let expected = if idx % n == 0 {
                t[(idx / n, j)]
            } else {
                f.zero()
            };
            if *coord != expected {
                action_ok = false;
            }
        }
    }
    checks.push(Check::new(
        "group-action",
        action_ok,
        "column j of T equals ad x (g^j) in the built algebra".to_string(),
    ));

    let stabilized = ad_power(&h, x, g, (p - 1) as usize) == h.sub(g, &h.unit_element());
    checks.push(Check::new(
        "stabilized-action",
        stabilized,
        format!("(ad x)^{}(g) = g - 1", p - 1),
    ));

    Ok(checks)
}

/// For the family with relations `gx - xg = g(g-1)`, `x^p = x`: verify the
/// coproduct power identity `Δ(x)^p = x^p ⊗ 1 + 1 ⊗ x^p + (g - 1) ⊗ x`, that
/// `x^p - x = 0` holds in the algebra, and that `Δ(x^p - x)` is primitive.
pub fn delta_xp_identity(id: &FamilyId, h: &HopfAlgebra) -> Result<Vec<Check>> {
    if id.kind() != FamilyKind::B4 {
        return Err(Error::InvalidFamily(format!(
            "the coproduct power battery applies to b4 instances, not {}",
            id.display_name()
        )));
    }
    let p = id.p();
    let gens = families::generators(id, h);
    let (g, x) = (&gens[0], &gens[1]);
    let u = h.unit_element();
    let xp = h.power(x, p as usize);

    let mut checks = Vec::new();
    checks.push(Check::new(
        "p-power-relation",
        xp == *x,
        format!("x^{p} = x in the algebra"),
    ));

    let lhs = h.tensor2_power(&h.comultiply(x), p as usize);
    let rhs = h.tensor2_add(
        &h.tensor2_add(&h.tensor_of(&xp, &u), &h.tensor_of(&u, &xp)),
        &h.tensor_of(&h.sub(g, &u), x),
    );
    checks.push(Check::new(
        "coproduct-p-power",
        lhs == rhs,
        format!("Δ(x)^{p} = x^{p} ⊗ 1 + 1 ⊗ x^{p} + (g - 1) ⊗ x"),
    ));

    let d = h.sub(&xp, x);
    let prim = h.tensor2_add(&h.tensor_of(&d, &u), &h.tensor_of(&u, &d));
    checks.push(Check::new(
        "frobenius-primitive",
        h.comultiply(&d) == prim,
        format!("x^{p} - x is primitive (both sides vanish)"),
    ));

    Ok(checks)
}

// ---- profiles ----------------------------------------------------------------

/// Multiplicative order of the stored antipode matrix. `cap` defaults to
/// `4 · dim`, far above the order of any antipode in scope.
pub fn antipode_order(h: &HopfAlgebra, cap: Option<usize>) -> Result<usize> {
    let cap = cap.unwrap_or(4 * h.dim());
    let s = h.antipode_matrix();
    if s.inverse().is_none() {
        return Err(Error::InvalidAlgebra(
            "the antipode matrix is singular".to_string(),
        ));
    }
    s.multiplicative_order(cap)
        .ok_or(Error::OrderExceedsCap { cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    pub commutative: bool,
    pub cocommutative: bool,
}

/// Commutativity of the product and of the coproduct, read off the tensors.
pub fn structure_flags(h: &HopfAlgebra) -> StructureFlags {
    let n = h.dim();
    let mt = h.mult_tensor();
    let ct = h.comult_tensor();
    let commutative = (0..n).all(|i| {
        (0..i).all(|j| (0..n).all(|k| mt.get(i, j, k) == mt.get(j, i, k)))
    });
    let cocommutative = (0..n).all(|i| {
        (0..n).all(|a| (0..a).all(|b| ct.get(i, a, b) == ct.get(i, b, a)))
    });
    StructureFlags {
        commutative,
        cocommutative,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrobeniusProfile {
    pub image_dim: usize,
    pub kernel_dim: usize,
}

/// Rank data of the p-th power map `a ↦ a^p` (p the field characteristic):
/// additive, hence linear over the prime field, exactly when the algebra is
/// commutative. Requires a commutative algebra over a prime field.
pub fn frobenius_profile(h: &HopfAlgebra) -> Result<FrobeniusProfile> {
    if !structure_flags(h).commutative {
        return Err(Error::FrobeniusNotApplicable(
            "the algebra is not commutative".to_string(),
        ));
    }
    let f = h.field();
    if f.degree() != 1 {
        return Err(Error::FrobeniusNotApplicable(format!(
            "the field has degree {} over its prime field",
            f.degree()
        )));
    }
    let p = f.characteristic();
    let rows = (0..h.dim())
        .map(|i| h.power(&h.basis_element(i), p as usize).coords)
        .collect();
    let rank = Matrix::from_rows(f, rows).rank();
    Ok(FrobeniusProfile {
        image_dim: rank,
        kernel_dim: h.dim() - rank,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PMapProfile {
    pub rank: usize,
    pub nilpotent: bool,
}

/// Rank and nilpotency of the restriction of `a ↦ a^p` to a space of
/// primitive elements. The space must be abelian (otherwise the p-th power
/// map is not additive on it) and closed under the map.
pub fn p_map_on_primitives(h: &HopfAlgebra, p11: &Subspace) -> Result<PMapProfile> {
    let f = h.field();
    if f.degree() != 1 {
        return Err(Error::FrobeniusNotApplicable(format!(
            "the field has degree {} over its prime field",
            f.degree()
        )));
    }
    let p = f.characteristic();
    let d = p11.dim();
    if d == 0 {
        return Ok(PMapProfile {
            rank: 0,
            nilpotent: true,
        });
    }
    let basis: Vec<Element> = p11
        .basis_rows()
        .map(|r| Element { coords: r.to_vec() })
        .collect();
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i + 1) {
            if h.multiply(a, b) != h.multiply(b, a) {
                return Err(Error::InvalidAlgebra(
                    "the primitive space is not abelian; its p-th power map is not additive"
                        .to_string(),
                ));
            }
        }
    }
    let mut rows = Vec::with_capacity(d);
    for b in &basis {
        let w = h.power(b, p as usize);
        let coords = p11.coordinates_of(&w.coords).ok_or(Error::PMapEscapes)?;
        rows.push(coords);
    }
    let m = Matrix::from_rows(f, rows);
    let rank = m.rank();
    let mut pow = m.clone();
    for _ in 1..d {
        pow = pow.mul(&m);
    }
    Ok(PMapProfile {
        rank,
        nilpotent: pow.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, FamilyId, FamilyKind};

    fn char_p(kind: FamilyKind, p: u64) -> (FamilyId, HopfAlgebra) {
        let id = FamilyId::char_p(kind, p).unwrap();
        let h = build(&id).unwrap();
        (id, h)
    }

    fn taft(p: u64) -> (FamilyId, HopfAlgebra) {
        let id = FamilyId::taft_default(p).unwrap();
        let h = build(&id).unwrap();
        (id, h)
    }

    fn auto() -> GrouplikeMode {
        GrouplikeMode::default()
    }

    // -- grouplikes --

    #[test]
    fn klein_group_algebra_has_four_grouplikes() {
        let (_, h) = char_p(FamilyKind::GroupCpxCp, 2);
        let g = grouplikes(&h, &GrouplikeMode::BruteForce { cap: 100 }).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.complete());
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 2);
        let mut orders = g.orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 2, 2]);
        assert_eq!(g.elements()[g.identity_index()], h.unit_element());
        for i in 0..4 {
            assert_eq!(g.table()[i][i], g.identity_index());
        }
    }

    #[test]
    fn cyclic_p_squared_group_algebra_has_exponent_p_squared() {
        let (_, h) = char_p(FamilyKind::GroupCp2, 3);
        let g = grouplikes(&h, &auto()).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.exponent(), 9);
        assert!(g.complete());
    }

    #[test]
    fn b4_grouplikes_are_the_powers_of_g() {
        let (_, h) = char_p(FamilyKind::B4, 2);
        let g = grouplikes(&h, &auto()).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.complete());
        assert!(g.index_of(&h.basis_element(2)).is_some());
    }

    #[test]
    fn a1_has_only_the_trivial_grouplike() {
        let (_, h) = char_p(FamilyKind::A1, 3);
        let g = grouplikes(&h, &auto()).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.complete());
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn taft_grouplike_scan_over_f7_is_exhaustive() {
        // 7^9 = 40 353 607 vectors; the largest enumeration in the suite.
        let (_, h) = taft(3);
        let g = grouplikes(&h, &GrouplikeMode::BruteForce { cap: 50_000_000 }).unwrap();
        assert!(g.complete());
        assert_eq!(g.len(), 3);
        for i in 0..3 {
            assert!(g.index_of(&h.basis_element(3 * i)).is_some());
        }
    }

    #[test]
    fn bruteforce_cap_refusal_reports_the_needed_count() {
        let (_, h) = taft(3);
        match grouplikes(&h, &GrouplikeMode::BruteForce { cap: 1000 }) {
            Err(Error::BruteForceCapExceeded { needed, cap }) => {
                assert_eq!(needed, 40_353_607);
                assert_eq!(cap, 1000);
            }
            other => panic!("expected a cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn verify_mode_assembles_a_supplied_subgroup() {
        let (_, h) = char_p(FamilyKind::GroupCp2, 2);
        let g2 = h.basis_element(2);
        let g = grouplikes(
            &h,
            &GrouplikeMode::Verify {
                candidates: vec![h.unit_element(), g2],
            },
        )
        .unwrap();
        assert_eq!(g.len(), 2);
        assert!(!g.complete());
    }

    #[test]
    fn verify_mode_rejects_a_non_grouplike_candidate() {
        let (_, h) = char_p(FamilyKind::B1, 2);
        let x = h.basis_element(1);
        let err = grouplikes(
            &h,
            &GrouplikeMode::Verify {
                candidates: vec![h.unit_element(), x],
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotGrouplike(_)));
    }

    #[test]
    fn verify_mode_detects_a_closure_failure() {
        // {1, g} inside k[C_4]: g·g = g² falls outside the set.
        let (_, h) = char_p(FamilyKind::GroupCp2, 2);
        let err = grouplikes(
            &h,
            &GrouplikeMode::Verify {
                candidates: vec![h.unit_element(), h.basis_element(1)],
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    // -- skew primitives --

    #[test]
    fn taft_skew_primitive_space_contains_x_and_one_minus_g() {
        let (_, h) = taft(2);
        let f = h.field().clone();
        let one = h.unit_element();
        let g = h.basis_element(2);
        let p = skew_primitives(&h, &one, &g).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.contains_vec(&h.basis_element(1).coords));
        let mut one_minus_g = h.unit_element();
        one_minus_g.coords[2] = f.neg(&f.one());
        assert!(p.contains_vec(&one_minus_g.coords));
        // The primitives proper vanish in the semisimple regime.
        assert_eq!(skew_primitives(&h, &one, &one).unwrap().dim(), 0);
    }

    #[test]
    fn b1_primitives_are_spanned_by_x() {
        let (_, h) = char_p(FamilyKind::B1, 3);
        let one = h.unit_element();
        let p = skew_primitives(&h, &one, &one).unwrap();
        assert_eq!(p.dim(), 1);
        assert!(p.contains_vec(&h.basis_element(1).coords));
    }

    #[test]
    fn skew_primitives_always_contain_the_grouplike_difference() {
        for kind in [FamilyKind::B3, FamilyKind::B4] {
            let (_, h) = char_p(kind, 3);
            let g = grouplikes(&h, &auto()).unwrap();
            for a in g.elements() {
                for b in g.elements() {
                    let p = skew_primitives(&h, a, b).unwrap();
                    assert!(p.contains_vec(&h.sub(a, b).coords));
                }
            }
        }
    }

    #[test]
    fn skew_primitives_reject_non_grouplike_arguments() {
        let (_, h) = char_p(FamilyKind::B1, 2);
        let x = h.basis_element(1);
        let err = skew_primitives(&h, &x, &h.unit_element()).unwrap_err();
        assert!(matches!(err, Error::NotGrouplike(_)));
    }

    // -- characters --

    #[test]
    fn taft_character_recovers_omega() {
        for p in [2u64, 3] {
            let (id, h) = taft(p);
            let g_like = grouplikes(&h, &auto()).unwrap();
            let one = h.unit_element();
            let g = h.basis_element(p as usize);
            let w = canonical_character_witness(&h, &g_like, &one, &g).unwrap();
            assert_eq!(w, h.basis_element(1), "canonical witness is x");
            let ch = conjugation_character(&h, &g_like, &one, &g, &w).unwrap();
            assert!(!ch.additive);
            let gi = g_like.index_of(&g).unwrap();
            assert_eq!(ch.values[gi], *id.omega().unwrap());
            assert_eq!(ch.values[g_like.identity_index()], h.field().one());
            assert!(character_laws_hold(&h, &g_like, &ch));
        }
    }

    #[test]
    fn b4_additive_character_value_is_one() {
        for p in [2u64, 3] {
            let (_, h) = char_p(FamilyKind::B4, p);
            let g_like = grouplikes(&h, &auto()).unwrap();
            let one = h.unit_element();
            let g = h.basis_element(p as usize);
            let w = canonical_character_witness(&h, &g_like, &one, &g).unwrap();
            assert_eq!(w, h.basis_element(1), "canonical witness is x");
            let ch = conjugation_character(&h, &g_like, &one, &g, &w).unwrap();
            assert!(ch.additive);
            let gi = g_like.index_of(&g).unwrap();
            assert_eq!(ch.values[gi], h.field().one());
            assert!(ch.values[g_like.identity_index()].is_zero());
            assert!(character_laws_hold(&h, &g_like, &ch));
        }
    }

    #[test]
    fn b3_additive_character_vanishes() {
        let (_, h) = char_p(FamilyKind::B3, 3);
        let g_like = grouplikes(&h, &auto()).unwrap();
        let one = h.unit_element();
        let g = h.basis_element(3);
        let w = canonical_character_witness(&h, &g_like, &one, &g).unwrap();
        let ch = conjugation_character(&h, &g_like, &one, &g, &w).unwrap();
        assert!(ch.additive);
        assert!(ch.values.iter().all(|v| v.is_zero()));
        assert!(character_laws_hold(&h, &g_like, &ch));
    }

    #[test]
    fn additive_character_refuses_equal_grouplikes() {
        let (_, h) = char_p(FamilyKind::B1, 2);
        let g_like = grouplikes(&h, &auto()).unwrap();
        let one = h.unit_element();
        let err = canonical_character_witness(&h, &g_like, &one, &one).unwrap_err();
        assert!(matches!(err, Error::AdditiveCharacterNeedsDistinctPair));
    }

    #[test]
    fn non_eigenvector_witness_is_rejected_with_its_defect() {
        let (_, h) = taft(3);
        let f = h.field().clone();
        let g_like = grouplikes(&h, &auto()).unwrap();
        let one = h.unit_element();
        let g = h.basis_element(3);
        // x + (1 - g) is skew-primitive but not an eigenvector of conjugation.
        let mut w = h.add(&h.basis_element(1), &h.unit_element());
        w.coords[3] = f.neg(&f.one());
        let err = conjugation_character(&h, &g_like, &one, &g, &w).unwrap_err();
        assert!(matches!(err, Error::NotACharacterWitness { .. }));
    }

    #[test]
    fn character_witness_outside_the_skew_space_is_rejected() {
        let (_, h) = taft(2);
        let g_like = grouplikes(&h, &auto()).unwrap();
        let one = h.unit_element();
        let g = h.basis_element(2);
        let err = conjugation_character(&h, &g_like, &one, &g, &h.basis_element(3)).unwrap_err();
        assert!(matches!(err, Error::InvalidAlgebra(_)));
    }

    // -- filtration --

    #[test]
    fn group_algebra_filtration_stabilizes_immediately() {
        let (_, h) = char_p(FamilyKind::GroupCpxCp, 3);
        let g = grouplikes(&h, &auto()).unwrap();
        let filt = coradical_filtration(&h, &g).unwrap();
        assert_eq!(filt.dims, vec![9]);
        assert_eq!(filt.stabilization_index, 0);
    }

    #[test]
    fn taft_filtration_dims_step_by_p() {
        let (_, h) = taft(3);
        let g = grouplikes(&h, &auto()).unwrap();
        let filt = coradical_filtration(&h, &g).unwrap();
        assert_eq!(filt.dims, vec![3, 6, 9]);
        assert_eq!(filt.stabilization_index, 2);
    }

    #[test]
    fn b1_filtration_dims() {
        let (_, h) = char_p(FamilyKind::B1, 2);
        let g = grouplikes(&h, &auto()).unwrap();
        let filt = coradical_filtration(&h, &g).unwrap();
        assert_eq!(filt.dims, vec![2, 4]);
    }

    #[test]
    fn filtration_from_a_proper_subgroup_stalls() {
        // Seeding with {1, g²} ⊂ G(k[C_4]) cannot generate the algebra.
        let (_, h) = char_p(FamilyKind::GroupCp2, 2);
        let sub = grouplikes(
            &h,
            &GrouplikeMode::Verify {
                candidates: vec![h.unit_element(), h.basis_element(2)],
            },
        )
        .unwrap();
        match coradical_filtration(&h, &sub) {
            Err(Error::FiltrationStalled { reached, dim }) => {
                assert_eq!((reached, dim), (2, 4));
            }
            other => panic!("expected a stall, got {other:?}"),
        }
    }

    #[test]
    fn filtration_compatibility_holds_for_taft() {
        let (_, h) = taft(2);
        let g = grouplikes(&h, &auto()).unwrap();
        let filt = coradical_filtration(&h, &g).unwrap();
        assert!(filtration_compatibility(&h, &filt).pass);
    }

    // -- Taft-Wilson --

    #[test]
    fn taft_wilson_holds_for_taft_and_b_types() {
        for (_, h) in [
            taft(2),
            char_p(FamilyKind::B4, 2),
            char_p(FamilyKind::B1, 3),
            char_p(FamilyKind::GroupCpxCp, 2),
        ] {
            let g = grouplikes(&h, &auto()).unwrap();
            let filt = coradical_filtration(&h, &g).unwrap();
            let check = taft_wilson_check(&h, &g, &filt).unwrap();
            assert!(check.pass, "{}", check.details);
        }
    }

    // -- quantum binomials --

    #[test]
    fn quantum_binomial_frozen_values() {
        let f7 = FieldSpec::prime(7).unwrap();
        let f3 = FieldSpec::prime(3).unwrap();
        let w = f7.from_int(2); // primitive cube root mod 7
        assert!(quantum_binomial(&f7, 3, 1, &w).is_zero());
        assert!(quantum_binomial(&f7, 3, 2, &w).is_zero());
        assert!(quantum_binomial(&f3, 2, 1, &f3.from_signed(-1)).is_zero());
        assert_eq!(quantum_binomial(&f7, 3, 0, &w), f7.one());
        assert_eq!(quantum_binomial(&f7, 3, 3, &w), f7.one());
        // Gaussian binomial (4 2)_ω at ω = 3: 3⁴+3³+2·3²+3+1 = 130 ≡ 4 (mod 7).
        let three = f7.from_int(3);
        assert_eq!(quantum_binomial(&f7, 4, 2, &three), f7.from_int(4));
        // Ordinary binomials at ω = 1.
        assert_eq!(quantum_binomial(&f7, 3, 1, &f7.one()), f7.from_int(3));
        assert!(quantum_binomial(&f7, 2, 5, &w).is_zero());
    }

    #[test]
    fn factorial_form_agrees_with_pascal_where_defined() {
        let f7 = FieldSpec::prime(7).unwrap();
        for wr in 1..7 {
            let w = f7.from_int(wr);
            for n in 0..=6u64 {
                for i in 0..=n {
                    if let Some(v) = quantum_binomial_factorial(&f7, n, i, &w) {
                        assert_eq!(v, quantum_binomial(&f7, n, i, &w), "({n} {i})_{wr}");
                    }
                }
            }
        }
        // Zero denominator: (4 2)_{-1} over F_3 divides by [2]_{-1}! = 0.
        let f3 = FieldSpec::prime(3).unwrap();
        let minus_one = f3.from_signed(-1);
        assert!(quantum_binomial_factorial(&f3, 4, 2, &minus_one).is_none());
        // (2 1)_{-1} is still defined there: [1]!·[1]! = 1.
        assert_eq!(
            quantum_binomial_factorial(&f3, 2, 1, &minus_one),
            Some(f3.zero())
        );
    }

    // -- identity batteries --

    #[test]
    fn frobenius_binomial_battery_passes_for_taft() {
        for p in [2u64, 3] {
            let (id, h) = taft(p);
            let checks = frobenius_binomial_identity(&id, &h).unwrap();
            assert_eq!(checks.len(), 6);
            for c in &checks {
                assert!(c.pass, "{}: {}", c.name, c.details);
            }
        }
    }

    #[test]
    fn frobenius_binomial_battery_rejects_other_families() {
        let (id, h) = char_p(FamilyKind::B4, 2);
        assert!(matches!(
            frobenius_binomial_identity(&id, &h),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn adjoint_matrix_battery_passes_for_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let checks = adjoint_matrix_identity(p).unwrap();
            for c in &checks {
                assert!(c.pass, "p = {p}, {}: {}", c.name, c.details);
            }
        }
    }

    #[test]
    fn adjoint_matrix_frozen_for_p_equals_two() {
        let f = FieldSpec::prime(2).unwrap();
        // ad x fixes 1 and sends g to g - g² = g - 1 ≡ g + 1 (mod 2).
        let t = Matrix::from_fn(&f, 2, 2, |_r, c| {
            if c == 1 {
                f.one()
            } else {
                f.zero()
            }
        });
        let (_, h) = char_p(FamilyKind::B4, 2);
        let x = h.basis_element(1);
        let g = h.basis_element(2);
        let adg = ad_power(&h, &x, &g, 1);
        assert_eq!(adg.coords[0], t[(0, 1)]);
        assert_eq!(adg.coords[2], t[(1, 1)]);
    }

    #[test]
    fn delta_xp_battery_passes_for_b4() {
        for p in [2u64, 3] {
            let (id, h) = char_p(FamilyKind::B4, p);
            let checks = delta_xp_identity(&id, &h).unwrap();
            for c in &checks {
                assert!(c.pass, "p = {p}, {}: {}", c.name, c.details);
            }
        }
    }

    // -- profiles --

    #[test]
    fn antipode_orders_of_known_families() {
        let (_, h) = char_p(FamilyKind::GroupCpxCp, 2);
        assert_eq!(antipode_order(&h, None).unwrap(), 1);
        let (_, h) = char_p(FamilyKind::B4, 2);
        assert_eq!(antipode_order(&h, None).unwrap(), 4);
        let (_, h) = char_p(FamilyKind::B4, 3);
        assert_eq!(antipode_order(&h, None).unwrap(), 6);
        let (_, h) = taft(3);
        assert_eq!(antipode_order(&h, None).unwrap(), 6);
        // S sends x to -x, which is x itself in characteristic 2.
        let (_, h) = char_p(FamilyKind::A1, 2);
        assert_eq!(antipode_order(&h, None).unwrap(), 1);
        let (_, h) = char_p(FamilyKind::A1, 3);
        assert_eq!(antipode_order(&h, None).unwrap(), 2);
    }

    #[test]
    fn antipode_order_respects_the_cap() {
        let (_, h) = char_p(FamilyKind::B4, 2);
        match antipode_order(&h, Some(3)) {
            Err(Error::OrderExceedsCap { cap: 3 }) => {}
            other => panic!("expected a cap error, got {other:?}"),
        }
    }

    #[test]
    fn structure_flags_of_known_families() {
        let (_, h) = taft(2);
        let fl = structure_flags(&h);
        assert!(!fl.commutative && !fl.cocommutative);
        let (_, h) = char_p(FamilyKind::A1, 2);
        let fl = structure_flags(&h);
        assert!(fl.commutative && fl.cocommutative);
        let (_, h) = char_p(FamilyKind::A5, 2);
        let fl = structure_flags(&h);
        assert!(!fl.commutative && fl.cocommutative);
        let (_, h) = char_p(FamilyKind::B3, 2);
        let fl = structure_flags(&h);
        assert!(fl.commutative && !fl.cocommutative);
        let (_, h) = char_p(FamilyKind::B4, 3);
        let fl = structure_flags(&h);
        assert!(!fl.commutative && !fl.cocommutative);
    }

    #[test]
    fn frobenius_image_separates_the_divided_power_families() {
        let dims: Vec<usize> = [FamilyKind::A6, FamilyKind::A7, FamilyKind::A8]
            .iter()
            .map(|&k| {
                let (_, h) = char_p(k, 3);
                frobenius_profile(&h).unwrap().image_dim
            })
            .collect();
        assert_eq!(dims, vec![1, 3, 9]);
    }

    #[test]
    fn frobenius_profile_requires_commutativity() {
        let (_, h) = char_p(FamilyKind::A5, 3);
        assert!(matches!(
            frobenius_profile(&h),
            Err(Error::FrobeniusNotApplicable(_))
        ));
    }

    #[test]
    fn p_map_profiles_of_the_primitively_generated_families() {
        let one_space = |h: &HopfAlgebra| {
            let u = h.unit_element();
            skew_primitives(h, &u, &u).unwrap()
        };
        let (_, h) = char_p(FamilyKind::A1, 3);
        let prof = p_map_on_primitives(&h, &one_space(&h)).unwrap();
        assert_eq!((prof.rank, prof.nilpotent), (0, true));
        let (_, h) = char_p(FamilyKind::A3, 3);
        let prof = p_map_on_primitives(&h, &one_space(&h)).unwrap();
        assert_eq!((prof.rank, prof.nilpotent), (1, true));
        let (_, h) = char_p(FamilyKind::A4, 3);
        let prof = p_map_on_primitives(&h, &one_space(&h)).unwrap();
        assert_eq!((prof.rank, prof.nilpotent), (2, false));
    }

    #[test]
    fn p_map_rejects_a_nonabelian_primitive_space() {
        let (_, h) = char_p(FamilyKind::A5, 3);
        let u = h.unit_element();
        let p11 = skew_primitives(&h, &u, &u).unwrap();
        assert_eq!(p11.dim(), 2);
        assert!(matches!(
            p_map_on_primitives(&h, &p11),
            Err(Error::InvalidAlgebra(_))
        ));
    }
}
