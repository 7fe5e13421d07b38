//! Constructors for the classified families, realized through a small
//! normal-form rewriting engine.
//!
//! Every family is presented by one or two generators and a handful of
//! relations. The engine orients each relation into a rewrite rule:
//!
//! - commutation rules move the second generator left past the first
//!   (`xg -> w^-1 gx` for the quantum plane relation, `xg -> gx - g^2 + g`
//!   for the mixed relation, `yx -> xy - y` for the Lie-type relation, and
//!   a plain swap for commutative presentations);
//! - power rules collapse a run of `p` equal letters into the relation's
//!   right-hand side (`g^p -> 1`, `x^p -> 0`, `x^p -> x`, `x^p -> y`, ...).
//!
//! Reduction fires the leftmost redex; a word with an out-of-order adjacent
//! pair never has a run starting at the same position, so the strategy is
//! unambiguous, and an out-of-order pair is always rewritten before any run
//! it overlaps to its right. Every rule strictly decreases the triple
//! (word length, count of second-generator letters, inversions) in
//! lexicographic order, so reduction terminates in any firing order; the
//! randomized-order tests below exercise confluence directly.
//!
//! The normal-form basis is `a^i b^j` with `0 <= i, j < p` (index `i*p + j`)
//! for two-generator families and `g^i` with `0 <= i < p^2` for the cyclic
//! group of order `p^2`.

use std::collections::BTreeMap;

use crate::field::{self, FieldSpec, Scalar};
use crate::hopf::{Element, HopfAlgebra, Tensor2, Tensor3};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A word in the family's generators: `0` is the first generator of the
/// normal form (`g`, or `x` for the connected types), `1` the second.
pub type Word = Vec<u8>;

/// The fifteen classified presentations: the fourteen characteristic-p
/// types plus the Taft family away from characteristic p.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyKind {
    /// Group algebra of the cyclic group of order `p^2`.
    GroupCp2,
    /// Group algebra of the elementary abelian group of order `p^2`.
    GroupCpxCp,
    /// `k<g,x>/(g^p - 1, x^p, gx - w xg)`, `w` a primitive p-th root of
    /// unity, characteristic different from `p`.
    Taft,
    /// `k[x,y]/(x^p, y^p)`, both generators primitive.
    A1,
    /// `k[x,y]/(x^p - x, y^p)`, both generators primitive.
    A2,
    /// `k[x,y]/(x^p - y, y^p)`, both generators primitive.
    A3,
    /// `k[x,y]/(x^p - x, y^p - y)`, both generators primitive.
    A4,
    /// `k<x,y>/([x,y] - y, x^p - x, y^p)`, both generators primitive.
    A5,
    /// `k[x,y]/(x^p, y^p)` with the divided-power coproduct on `y`.
    A6,
    /// `k[x,y]/(x^p, y^p - x)` with the divided-power coproduct on `y`.
    A7,
    /// `k[x,y]/(x^p - x, y^p - y)` with the divided-power coproduct on `y`.
    A8,
    /// `k[g,x]/(g^p - 1, x^p)`, `x` primitive.
    B1,
    /// `k[g,x]/(g^p - 1, x^p - x)`, `x` primitive.
    B2,
    /// `k[g,x]/(g^p - 1, x^p)`, `x` a (1,g)-skew-primitive.
    B3,
    /// `k<g,x>/(g^p - 1, gx - xg - g(g-1), x^p - x)`, `x` skew-primitive.
    B4,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 15] = [
        FamilyKind::GroupCp2,
        FamilyKind::GroupCpxCp,
        FamilyKind::Taft,
        FamilyKind::A1,
        FamilyKind::A2,
        FamilyKind::A3,
        FamilyKind::A4,
        FamilyKind::A5,
        FamilyKind::A6,
        FamilyKind::A7,
        FamilyKind::A8,
        FamilyKind::B1,
        FamilyKind::B2,
        FamilyKind::B3,
        FamilyKind::B4,
    ];

    /// The fourteen types defined over the prime field of characteristic p,
    /// in report order.
    pub const CHAR_P: [FamilyKind; 14] = [
        FamilyKind::GroupCp2,
        FamilyKind::GroupCpxCp,
        FamilyKind::A1,
        FamilyKind::A2,
        FamilyKind::A3,
        FamilyKind::A4,
        FamilyKind::A5,
        FamilyKind::A6,
        FamilyKind::A7,
        FamilyKind::A8,
        FamilyKind::B1,
        FamilyKind::B2,
        FamilyKind::B3,
        FamilyKind::B4,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyKind::GroupCp2 => "group-cp2",
            FamilyKind::GroupCpxCp => "group-cpxcp",
            FamilyKind::Taft => "taft",
            FamilyKind::A1 => "a1",
            FamilyKind::A2 => "a2",
            FamilyKind::A3 => "a3",
            FamilyKind::A4 => "a4",
            FamilyKind::A5 => "a5",
            FamilyKind::A6 => "a6",
            FamilyKind::A7 => "a7",
            FamilyKind::A8 => "a8",
            FamilyKind::B1 => "b1",
            FamilyKind::B2 => "b2",
            FamilyKind::B3 => "b3",
            FamilyKind::B4 => "b4",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.iter().copied().find(|k| k.cli_name() == name)
    }
}

/// A fully parameterized family instance. Constructors validate the
/// parameter combination, so a held `FamilyId` is always buildable.
#[derive(Clone, PartialEq, Debug)]
pub struct FamilyId {
    kind: FamilyKind,
    p: u64,
    field: FieldSpec,
    omega: Option<Scalar>,
}

impl FamilyId {
    pub fn new(
        kind: FamilyKind,
        p: u64,
        field: FieldSpec,
        omega: Option<Scalar>,
    ) -> Result<FamilyId> {
        if !field::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        match kind {
            FamilyKind::GroupCp2 | FamilyKind::GroupCpxCp => {
                if omega.is_some() {
                    return Err(Error::InvalidFamily(
                        "group algebras take no omega parameter".into(),
                    ));
                }
            }
            FamilyKind::Taft => {
                let omega = omega.as_ref().ok_or_else(|| {
                    Error::InvalidFamily("taft requires an omega parameter".into())
                })?;
                if field.characteristic() == p {
                    return Err(Error::InvalidFamily(format!(
                        "taft is defined over characteristic different from p = {p}"
                    )));
                }
                field.check(omega)?;
                if field.multiplicative_order(omega)? != p {
                    return Err(Error::InvalidFamily(format!(
                        "omega = {} is not a primitive {p}-th root of unity in {field}",
                        field.scalar_string(omega)
                    )));
                }
            }
            _ => {
                if field.characteristic() != p || field.degree() != 1 {
                    return Err(Error::InvalidFamily(format!(
                        "{} is defined over the prime field of characteristic {p}, got {field}",
                        kind.cli_name()
                    )));
                }
                if omega.is_some() {
                    return Err(Error::InvalidFamily(format!(
                        "{} takes no omega parameter",
                        kind.cli_name()
                    )));
                }
            }
        }
        Ok(FamilyId {
            kind,
            p,
            field,
            omega,
        })
    }

    /// A characteristic-p instance over the prime field `F_p`.
    pub fn char_p(kind: FamilyKind, p: u64) -> Result<FamilyId> {
        FamilyId::new(kind, p, FieldSpec::prime(p)?, None)
    }

    pub fn taft(p: u64, field: FieldSpec, omega: Scalar) -> Result<FamilyId> {
        FamilyId::new(FamilyKind::Taft, p, field, Some(omega))
    }

    /// The Taft instance over the smallest prime field admitting a
    /// primitive p-th root of unity (q = 3, 7, 11 for p = 2, 3, 5), with
    /// the canonically smallest root as omega.
    pub fn taft_default(p: u64) -> Result<FamilyId> {
        if !field::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut q = p + 1;
        while !(q % p == 1 && field::is_prime(q)) {
            q += 1;
        }
        let field = FieldSpec::prime(q)?;
        let omega = field.primitive_root_of_unity(p)?;
        FamilyId::new(FamilyKind::Taft, p, field, Some(omega))
    }

    pub fn group_cp2(p: u64, field: FieldSpec) -> Result<FamilyId> {
        FamilyId::new(FamilyKind::GroupCp2, p, field, None)
    }

    pub fn group_cpxcp(p: u64, field: FieldSpec) -> Result<FamilyId> {
        FamilyId::new(FamilyKind::GroupCpxCp, p, field, None)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn omega(&self) -> Option<&Scalar> {
        self.omega.as_ref()
    }

    /// CLI name, with the root of unity appended for Taft instances
    /// ("taft-w2"): distinct omegas are distinct classification rows.
    pub fn display_name(&self) -> String {
        match self.omega {
            Some(ref w) => format!("taft-w{}", self.field.scalar_string(w)),
            None => self.kind.cli_name().to_string(),
        }
    }
}

/// All fourteen characteristic-p types at a given p, in report order.
pub fn all_char_p(p: u64) -> Result<Vec<FamilyId>> {
    FamilyKind::CHAR_P
        .iter()
        .map(|&k| FamilyId::char_p(k, p))
        .collect()
}

/// The classification classes away from characteristic p: both group
/// algebras over the given field plus one Taft instance per primitive p-th
/// root of unity, roots in canonical scalar order. Over a field with no
/// primitive p-th roots no Taft algebra exists, so only the groups appear.
pub fn all_char_ne_p(p: u64, field: &FieldSpec) -> Result<Vec<FamilyId>> {
    let mut out = vec![
        FamilyId::group_cp2(p, field.clone())?,
        FamilyId::group_cpxcp(p, field.clone())?,
    ];
    match primitive_pth_roots(field, p) {
        Ok(roots) => {
            for omega in roots {
                out.push(FamilyId::taft(p, field.clone(), omega)?);
            }
        }
        Err(Error::NoRootOfUnity { .. }) => {}
        Err(e) => return Err(e),
    }
    Ok(out)
}

/// All p-1 primitive p-th roots of unity in canonical scalar order.
pub fn primitive_pth_roots(field: &FieldSpec, p: u64) -> Result<Vec<Scalar>> {
    if field.characteristic() == p {
        return Err(Error::RootInOwnCharacteristic { p });
    }
    let mut out = Vec::new();
    for s in field.enumerate() {
        if s.is_zero() {
            continue;
        }
        if field.multiplicative_order(&s)? == p {
            out.push(s);
        }
    }
    if out.is_empty() {
        return Err(Error::NoRootOfUnity {
            p,
            order: field.order(),
            field: format!("{field}"),
        });
    }
    Ok(out)
}

/// `c_i = binom(p, i)/p mod p` for `i = 1, ..., p-1`: the coefficients of
/// the divided-power coproduct `Delta(y) = y*1 + 1*y + sum c_i x^i * x^(p-i)`.
/// The integer division is exact because p divides `binom(p, i)` strictly
/// between the endpoints.
pub fn divided_power_coefficients(p: u64) -> Result<Vec<Scalar>> {
    if !field::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let f = FieldSpec::prime(p)?;
    let mut out = Vec::with_capacity(p as usize - 1);
    for i in 1..p {
        let b = binomial(p, i);
        debug_assert_eq!(b % p as u128, 0);
        out.push(f.from_int(((b / p as u128) % p as u128) as u64));
    }
    Ok(out)
}

/// Exact binomial coefficient; every intermediate division is exact.
fn binomial(n: u64, k: u64) -> u128 {
    let mut r: u128 = 1;
    for i in 1..=k as u128 {
        r = r * (n as u128 - k as u128 + i) / i;
    }
    r
}

// ---- rewriting engine -------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Redex {
    /// Adjacent out-of-order pair at this position.
    Swap(usize),
    /// Run of `run_len` equal letters starting at this position.
    Run(usize),
}

/// The oriented relations of one family.
struct RuleSet {
    field: FieldSpec,
    n_letters: usize,
    /// Run length triggering the power rule, per letter.
    run_len: Vec<usize>,
    /// Replacement for a full run, per letter (empty: the power is zero).
    run_rhs: Vec<Vec<(Word, Scalar)>>,
    /// Replacement for the out-of-order pair `[1, 0]`.
    comm_rhs: Vec<(Word, Scalar)>,
}

impl RuleSet {
    fn for_family(id: &FamilyId) -> RuleSet {
        let f = id.field.clone();
        let p = id.p as usize;
        let one = f.one();
        let neg_one = f.from_signed(-1);
        let to_one = vec![(Word::new(), one)];
        let to_zero: Vec<(Word, Scalar)> = Vec::new();
        let to_self = |letter: u8| vec![(vec![letter], one)];
        let swap = vec![(vec![0, 1], one)];
        match id.kind {
            FamilyKind::GroupCp2 => RuleSet {
                field: f,
                n_letters: 1,
                run_len: vec![p * p],
                run_rhs: vec![to_one],
                comm_rhs: Vec::new(),
            },
            FamilyKind::GroupCpxCp => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_one.clone(), to_one],
                comm_rhs: swap,
            },
            FamilyKind::Taft => {
                let w_inv = f.inv(id.omega.as_ref().unwrap()).expect("omega is a unit");
                RuleSet {
                    field: f,
                    n_letters: 2,
                    run_len: vec![p, p],
                    run_rhs: vec![to_one, to_zero],
                    comm_rhs: vec![(vec![0, 1], w_inv)],
                }
            }
            FamilyKind::A1 | FamilyKind::A6 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_zero.clone(), to_zero],
                comm_rhs: swap,
            },
            FamilyKind::A2 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_self(0), to_zero],
                comm_rhs: swap,
            },
            FamilyKind::A3 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_self(1), to_zero],
                comm_rhs: swap,
            },
            FamilyKind::A4 | FamilyKind::A8 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_self(0), to_self(1)],
                comm_rhs: swap,
            },
            FamilyKind::A5 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_self(0), to_zero],
                // yx -> xy - y
                comm_rhs: vec![(vec![0, 1], one), (vec![1], neg_one)],
            },
            FamilyKind::A7 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_zero, to_self(0)],
                comm_rhs: swap,
            },
            FamilyKind::B1 | FamilyKind::B3 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_one, to_zero],
                comm_rhs: swap,
            },
            FamilyKind::B2 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_one, to_self(1)],
                comm_rhs: swap,
            },
            FamilyKind::B4 => RuleSet {
                field: f,
                n_letters: 2,
                run_len: vec![p, p],
                run_rhs: vec![to_one, to_self(1)],
                // xg -> gx - g^2 + g
                comm_rhs: vec![
                    (vec![0, 1], one),
                    (vec![0, 0], neg_one),
                    (vec![0], one),
                ],
            },
        }
    }

    fn redex_at(&self, w: &Word, i: usize) -> Option<Redex> {
        if i + 1 < w.len() && w[i] > w[i + 1] {
            return Some(Redex::Swap(i));
        }
        let l = self.run_len[w[i] as usize];
        if i + l <= w.len() && w[i..i + l].iter().all(|&c| c == w[i]) {
            return Some(Redex::Run(i));
        }
        None
    }

    fn first_redex(&self, w: &Word) -> Option<Redex> {
        (0..w.len()).find_map(|i| self.redex_at(w, i))
    }

    #[cfg(test)]
    fn all_redexes(&self, w: &Word) -> Vec<Redex> {
        (0..w.len()).filter_map(|i| self.redex_at(w, i)).collect()
    }

    fn fire(&self, w: &Word, r: Redex) -> Vec<(Word, Scalar)> {
        let splice = |at: usize, removed: usize, rhs: &[(Word, Scalar)]| {
            rhs.iter()
                .map(|(mid, c)| {
                    let mut nw = Word::with_capacity(w.len() - removed + mid.len());
                    nw.extend_from_slice(&w[..at]);
                    nw.extend_from_slice(mid);
                    nw.extend_from_slice(&w[at + removed..]);
                    (nw, *c)
                })
                .collect()
        };
        match r {
            Redex::Swap(i) => splice(i, 2, &self.comm_rhs),
            Redex::Run(i) => splice(i, self.run_len[w[i] as usize], &self.run_rhs[w[i] as usize]),
        }
    }

    fn add_term(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar, f: &FieldSpec) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match map.entry(w) {
            Entry::Occupied(mut e) => {
                let s = f.add(e.get(), &c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Deterministic reduction: repeatedly fire the leftmost redex of the
    /// lexicographically first reducible word.
    fn reduce(&self, input: BTreeMap<Word, Scalar>) -> BTreeMap<Word, Scalar> {
        let mut done = BTreeMap::new();
        let mut work = input;
        while let Some((w, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.first_redex(&w) {
                None => Self::add_term(&mut done, w, c, &self.field),
                Some(r) => {
                    for (nw, rc) in self.fire(&w, r) {
                        Self::add_term(&mut work, nw, self.field.mul(&c, &rc), &self.field);
                    }
                }
            }
        }
        done
    }

    /// Reduction firing redexes in an arbitrary externally chosen order;
    /// `pick(n)` must return an index below `n`. Used to test confluence.
    #[cfg(test)]
    fn reduce_with_choice(
        &self,
        input: BTreeMap<Word, Scalar>,
        pick: &mut dyn FnMut(usize) -> usize,
    ) -> BTreeMap<Word, Scalar> {
        let mut terms = input;
        terms.retain(|_, c| !c.is_zero());
        loop {
            let reducible: Vec<(Word, Vec<Redex>)> = terms
                .keys()
                .filter_map(|w| {
                    let rs = self.all_redexes(w);
                    (!rs.is_empty()).then(|| (w.clone(), rs))
                })
                .collect();
            if reducible.is_empty() {
                return terms;
            }
            let (w, rs) = &reducible[pick(reducible.len())];
            let r = rs[pick(rs.len())];
            let c = terms.remove(w).unwrap();
            for (nw, rc) in self.fire(w, r) {
                Self::add_term(&mut terms, nw, self.field.mul(&c, &rc), &self.field);
            }
        }
    }

    /// Basis index of a normal-form word.
    fn word_index(&self, p: usize, w: &Word) -> usize {
        debug_assert!(self.first_redex(w).is_none(), "word {w:?} is not normal");
        if self.n_letters == 1 {
            w.len()
        } else {
            let i = w.iter().filter(|&&c| c == 0).count();
            i * p + (w.len() - i)
        }
    }
}

fn monomial_word(n_letters: usize, p: usize, index: usize) -> Word {
    if n_letters == 1 {
        vec![0; index]
    } else {
        let mut w = vec![0u8; index / p];
        w.extend(std::iter::repeat(1).take(index % p));
        w
    }
}

fn letter_names(kind: FamilyKind) -> (&'static str, &'static str) {
    match kind {
        FamilyKind::GroupCp2 => ("g", ""),
        FamilyKind::GroupCpxCp => ("g", "h"),
        FamilyKind::Taft
        | FamilyKind::B1
        | FamilyKind::B2
        | FamilyKind::B3
        | FamilyKind::B4 => ("g", "x"),
        _ => ("x", "y"),
    }
}

/// Reduce an arbitrary generator word to normal-form coordinates.
/// Letters must be below the family's generator count (0, and 1 for
/// two-generator families).
pub fn rewrite_to_normal_form(id: &FamilyId, word: &[u8]) -> Element {
    let rules = RuleSet::for_family(id);
    for &l in word {
        assert!(
            (l as usize) < rules.n_letters,
            "letter {l} is outside the generator alphabet"
        );
    }
    let p = id.p as usize;
    let dim = p * p;
    let mut terms = BTreeMap::new();
    terms.insert(word.to_vec(), id.field.one());
    let mut coords = vec![id.field.zero(); dim];
    for (w, c) in rules.reduce(terms) {
        coords[rules.word_index(p, &w)] = c;
    }
    Element { coords }
}

/// Build the structure constants of a family instance.
///
/// Multiplication comes from the rewriting engine; comultiplication extends
/// the generator coproducts multiplicatively through the tensor-square
/// product; the antipode is assembled from the generator images as an
/// antihomomorphism, except for A6-A8 (whose generator antipode has no
/// stated closed form) where it is solved from the convolution equations.
pub fn build(id: &FamilyId) -> Result<HopfAlgebra> {
    let rules = RuleSet::for_family(id);
    let f = id.field.clone();
    let p = id.p as usize;
    let dim = p * p;
    let (a_name, b_name) = letter_names(id.kind);
    let basis_labels: Vec<String> = (0..dim)
        .map(|k| {
            if rules.n_letters == 1 {
                format!("{a_name}^{k}")
            } else {
                format!("{a_name}^{} {b_name}^{}", k / p, k % p)
            }
        })
        .collect();

    // Left multiplication by each generator, as a matrix on normal-form
    // coordinates (column i = letter · monomial_i). Each column is a single
    // short word reduction: prepending the first letter keeps the word
    // sorted, and prepending the second only walks one letter across the
    // head. Left multiplication by a whole monomial is then a composition of
    // these operators, so the multiplication tensor costs matrix products
    // instead of reducing `dim²` doubled words (whose intermediate
    // interleavings branch badly under three-term commutation rules).
    let mut letter_ops: Vec<Matrix> = Vec::new();
    for letter in 0..rules.n_letters {
        let mut m = Matrix::zeros(&f, dim, dim);
        for i in 0..dim {
            let mut w = vec![letter as u8];
            w.extend_from_slice(&monomial_word(rules.n_letters, p, i));
            let mut terms = BTreeMap::new();
            terms.insert(w, f.one());
            for (word, c) in rules.reduce(terms) {
                m.set(rules.word_index(p, &word), i, c);
            }
        }
        letter_ops.push(m);
    }
    // ops[k] = left multiplication by the k-th basis monomial, built by
    // peeling the leading letter: a^i b^j descends from a^(i-1) b^j, and b^j
    // from b^(j-1).
    let mut ops: Vec<Matrix> = Vec::with_capacity(dim);
    ops.push(Matrix::identity(&f, dim));
    for k in 1..dim {
        let (letter, prev) = if rules.n_letters == 1 || k < p {
            (rules.n_letters - 1, k - 1)
        } else {
            (0, k - p)
        };
        ops.push(letter_ops[letter].mul(&ops[prev]));
    }
    let mut mult = Tensor3::zeros(&f, dim);
    for a in 0..dim {
        for b in 0..dim {
            for k in 0..dim {
                let c = ops[a][(k, b)];
                if !c.is_zero() {
                    mult.set(a, b, k, c);
                }
            }
        }
    }

    let mut unit = vec![f.zero(); dim];
    unit[0] = f.one();

    let counit: Vec<Scalar> = (0..dim)
        .map(|k| {
            let trivial = match id.kind {
                // Grouplike generators: eps = 1 everywhere.
                FamilyKind::GroupCp2 | FamilyKind::GroupCpxCp => true,
                // eps(g) = 1, eps(x) = 0: monomials with no x survive.
                FamilyKind::Taft
                | FamilyKind::B1
                | FamilyKind::B2
                | FamilyKind::B3
                | FamilyKind::B4 => k % p == 0,
                // Both generators have eps = 0.
                _ => k == 0,
            };
            if trivial {
                f.one()
            } else {
                f.zero()
            }
        })
        .collect();

    let mut h = HopfAlgebra {
        field: f.clone(),
        dim,
        basis_labels,
        mult,
        unit,
        comult: Tensor3::zeros(&f, dim),
        counit,
        antipode: Matrix::identity(&f, dim),
    };

    // Generator coproducts on the monomial basis. For two-generator
    // families the first generator is basis index p, the second index 1.
    let gen_index = |letter: usize| -> usize {
        if rules.n_letters == 1 {
            1
        } else if letter == 0 {
            p
        } else {
            1
        }
    };
    let mut gen_cop: Vec<Tensor2> = Vec::new();
    for letter in 0..rules.n_letters {
        let gi = gen_index(letter);
        let mut t = Tensor2 {
            n: dim,
            coords: vec![f.zero(); dim * dim],
        };
        let grouplike = matches!(id.kind, FamilyKind::GroupCp2 | FamilyKind::GroupCpxCp)
            || (letter == 0 && rules.n_letters == 2 && b_name == "x");
        if grouplike {
            t.coords[gi * dim + gi] = f.one();
        } else {
            t.coords[gi * dim] = f.one();
            match id.kind {
                // x (x) 1 + g (x) x
                FamilyKind::Taft | FamilyKind::B3 | FamilyKind::B4 => {
                    t.coords[p * dim + gi] = f.one();
                }
                // Divided-power correction on the second generator.
                FamilyKind::A6 | FamilyKind::A7 | FamilyKind::A8 if letter == 1 => {
                    t.coords[gi] = f.one();
                    let cs = divided_power_coefficients(id.p)?;
                    for (i, c) in (1..p).zip(cs) {
                        t.coords[(i * p) * dim + (p - i) * p] = c;
                    }
                }
                _ => {
                    t.coords[gi] = f.one();
                }
            }
        }
        gen_cop.push(t);
    }

    h.comult.set(0, 0, 0, f.one());
    for k in 1..dim {
        let (prev, letter) = if rules.n_letters == 1 {
            (k - 1, 0)
        } else if k % p > 0 {
            (k - 1, 1)
        } else {
            (k - p, 0)
        };
        let prev_t = Tensor2 {
            n: dim,
            coords: h.comult.slab(prev).to_vec(),
        };
        let t = h.tensor2_multiply(&prev_t, &gen_cop[letter]);
        h.comult.set_slab(k, &t.coords);
    }

    match id.kind {
        FamilyKind::A6 | FamilyKind::A7 | FamilyKind::A8 => {
            h.antipode = h.compute_antipode()?;
        }
        _ => {
            // S(a^i b^j) = S(b)^j S(a)^i from the generator images.
            let s_gen: Vec<Element> = (0..rules.n_letters)
                .map(|letter| {
                    let mut e = h.zero_element();
                    match (id.kind, letter) {
                        (FamilyKind::GroupCp2, _) => e.coords[dim - 1] = f.one(),
                        (FamilyKind::GroupCpxCp, 0) => e.coords[(p - 1) * p] = f.one(),
                        (FamilyKind::GroupCpxCp, 1) => e.coords[p - 1] = f.one(),
                        // S(g) = g^(p-1)
                        (_, 0) if b_name == "x" => e.coords[(p - 1) * p] = f.one(),
                        // S(x) = -g^(p-1) x
                        (FamilyKind::Taft | FamilyKind::B3 | FamilyKind::B4, 1) => {
                            e.coords[(p - 1) * p + 1] = f.from_signed(-1)
                        }
                        // Primitive generators: S = negation.
                        (_, letter) => {
                            e.coords[gen_index(letter)] = f.from_signed(-1)
                        }
                    }
                    e
                })
                .collect();
            let mut antipode = Matrix::zeros(&f, dim, dim);
            for k in 0..dim {
                let (i, j) = if rules.n_letters == 1 {
                    (k, 0)
                } else {
                    (k / p, k % p)
                };
                let mut s = h.power(&s_gen[rules.n_letters - 1], j);
                if rules.n_letters == 2 {
                    s = h.multiply(&s, &h.power(&s_gen[0], i));
                } else {
                    s = h.power(&s_gen[0], i);
                }
                for (c, v) in s.coords.into_iter().enumerate() {
                    antipode.set(k, c, v);
                }
            }
            h.antipode = antipode;
        }
    }

    Ok(h)
}

/// The generator elements of a built family instance, in presentation
/// order: `[g]`, `[g, h]`, `[g, x]`, or `[x, y]`.
pub fn generators(id: &FamilyId, h: &HopfAlgebra) -> Vec<Element> {
    let p = id.p as usize;
    match id.kind {
        FamilyKind::GroupCp2 => vec![h.basis_element(1)],
        _ => vec![h.basis_element(p), h.basis_element(1)],
    }
}

/// The grouplike elements a family instance is constructed with: the group
/// basis for group algebras, powers of `g` for the Taft and B types, and
/// the unit alone for the connected types.
pub fn known_grouplikes(id: &FamilyId, h: &HopfAlgebra) -> Vec<Element> {
    let p = id.p as usize;
    match id.kind {
        FamilyKind::GroupCp2 | FamilyKind::GroupCpxCp => {
            (0..h.dim()).map(|i| h.basis_element(i)).collect()
        }
        FamilyKind::Taft
        | FamilyKind::B1
        | FamilyKind::B2
        | FamilyKind::B3
        | FamilyKind::B4 => (0..p).map(|i| h.basis_element(i * p)).collect(),
        _ => vec![h.basis_element(0)],
    }
}

/// Evaluate every defining relation of the presentation inside the built
/// algebra, via `multiply`/`power` on the generator elements only — an
/// independent check on the structure constants. Returns `(relation, holds)`
/// pairs.
pub fn verify_relations(id: &FamilyId, h: &HopfAlgebra) -> Vec<(String, bool)> {
    let p = id.p as usize;
    let one = h.unit_element();
    let gens = generators(id, h);
    let mut out = Vec::new();
    let mut check = |name: String, e: Element| {
        out.push((name, e.is_zero()));
    };
    match id.kind {
        FamilyKind::GroupCp2 => {
            let g = &gens[0];
            check(
                format!("g^{} - 1", p * p),
                h.sub(&h.power(g, p * p), &one),
            );
        }
        FamilyKind::GroupCpxCp => {
            let (g, k) = (&gens[0], &gens[1]);
            check(format!("g^{p} - 1"), h.sub(&h.power(g, p), &one));
            check(format!("h^{p} - 1"), h.sub(&h.power(k, p), &one));
            check("hg - gh".into(), h.sub(&h.multiply(k, g), &h.multiply(g, k)));
        }
        FamilyKind::Taft => {
            let (g, x) = (&gens[0], &gens[1]);
            let w = id.omega.as_ref().unwrap();
            check(format!("g^{p} - 1"), h.sub(&h.power(g, p), &one));
            check(format!("x^{p}"), h.power(x, p));
            check(
                "gx - w xg".into(),
                h.sub(&h.multiply(g, x), &h.scale(w, &h.multiply(x, g))),
            );
        }
        FamilyKind::B4 => {
            let (g, x) = (&gens[0], &gens[1]);
            check(format!("g^{p} - 1"), h.sub(&h.power(g, p), &one));
            check(format!("x^{p} - x"), h.sub(&h.power(x, p), x));
            let lhs = h.sub(&h.multiply(g, x), &h.multiply(x, g));
            let rhs = h.sub(&h.power(g, 2), g);
            check("gx - xg - g(g-1)".into(), h.sub(&lhs, &rhs));
        }
        FamilyKind::A5 => {
            let (x, y) = (&gens[0], &gens[1]);
            check(format!("x^{p} - x"), h.sub(&h.power(x, p), x));
            check(format!("y^{p}"), h.power(y, p));
            let comm = h.sub(&h.multiply(x, y), &h.multiply(y, x));
            check("[x,y] - y".into(), h.sub(&comm, y));
        }
        kind => {
            // The remaining families are commutative in two generators.
            let (a, b) = (&gens[0], &gens[1]);
            let (a_name, b_name) = letter_names(kind);
            check(
                format!("{b_name}{a_name} - {a_name}{b_name}"),
                h.sub(&h.multiply(b, a), &h.multiply(a, b)),
            );
            let a_pow = h.power(a, p);
            let b_pow = h.power(b, p);
            match kind {
                FamilyKind::B1 | FamilyKind::B3 => {
                    check(format!("g^{p} - 1"), h.sub(&a_pow, &one));
                    check(format!("x^{p}"), b_pow);
                }
                FamilyKind::B2 => {
                    check(format!("g^{p} - 1"), h.sub(&a_pow, &one));
                    check(format!("x^{p} - x"), h.sub(&b_pow, b));
                }
                FamilyKind::A1 | FamilyKind::A6 => {
                    check(format!("x^{p}"), a_pow);
                    check(format!("y^{p}"), b_pow);
                }
                FamilyKind::A2 => {
                    check(format!("x^{p} - x"), h.sub(&a_pow, a));
                    check(format!("y^{p}"), b_pow);
                }
                FamilyKind::A3 => {
                    check(format!("x^{p} - y"), h.sub(&a_pow, b));
                    check(format!("y^{p}"), b_pow);
                }
                FamilyKind::A4 | FamilyKind::A8 => {
                    check(format!("x^{p} - x"), h.sub(&a_pow, a));
                    check(format!("y^{p} - y"), h.sub(&b_pow, b));
                }
                FamilyKind::A7 => {
                    check(format!("x^{p}"), a_pow);
                    check(format!("y^{p} - x"), h.sub(&b_pow, a));
                }
                _ => unreachable!("handled above"),
            }
        }
    }
    out
}
