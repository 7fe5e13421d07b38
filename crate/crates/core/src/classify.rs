//! Invariant fingerprints and self-calibrating type identification.
//!
//! A [`Fingerprint`] packs the basis-independent invariants of a Hopf
//! algebra — grouplike count and exponent, (co)commutativity, antipode
//! order, skew-primitive dimensions, Frobenius and p-map data, and the
//! discrete log of the distinguished character value — into one comparable
//! record. [`classify`] matches an input's fingerprint against a
//! calibration table computed in the same run from the known families of
//! its dimension and characteristic, so the matcher never depends on
//! stored constants: if two reference types ever collided the run would
//! refuse to answer rather than guess.

use crate::analysis::{self, GrouplikeMode};
use crate::families::{self, FamilyId};
use crate::field::{is_prime, FieldSpec};
use crate::hopf::{Element, HopfAlgebra};
use crate::{Error, Result};
use serde_json::{json, Value};

/// Basis-independent invariants of a finite-dimensional Hopf algebra.
///
/// Every field is preserved by base change along a basis permutation or an
/// invertible change of basis, so two presentations of the same algebra
/// always fingerprint identically. `skew_quotient_dims` lists, for every
/// ordered pair `(g, k)` of grouplikes, the dimension of the skew-primitive
/// space `P_{g,k}` modulo the grouplike span, sorted so the multiset — not
/// the pair order — is what gets compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub dim: usize,
    pub field_char: u64,
    pub n_grouplikes: usize,
    pub grouplike_exponent: usize,
    pub commutative: bool,
    pub cocommutative: bool,
    pub antipode_order: usize,
    /// Dimension of the space of primitive elements `P_{1,1}`.
    pub dim_p11: usize,
    /// Sorted multiset of `dim P_{g,k} / (H_0 ∩ P_{g,k})` over ordered pairs.
    pub skew_quotient_dims: Vec<usize>,
    /// Rank of `a ↦ a^char` when the algebra is commutative over a prime
    /// field; `None` otherwise.
    pub frobenius_image_dim: Option<usize>,
    /// Rank of the restriction of `v ↦ v^char` to `P_{1,1}`, when that
    /// restriction is defined (prime field, nonzero `P_{1,1}` spanned by
    /// pairwise-commuting elements).
    pub p_map_rank: Option<usize>,
    pub p_map_nilpotent: Option<bool>,
    /// Discrete log, base the canonical root of unity of matching order, of
    /// the conjugation-character value at the distinguished grouplike: the
    /// first `f ≠ 1` for which `P_{1,f}` exceeds the grouplike span. Only
    /// defined in the multiplicative (eigenvalue) regime.
    pub omega_exponent: Option<u64>,
}

impl Fingerprint {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "field_char": self.field_char,
            "n_grouplikes": self.n_grouplikes,
            "grouplike_exponent": self.grouplike_exponent,
            "commutative": self.commutative,
            "cocommutative": self.cocommutative,
            "antipode_order": self.antipode_order,
            "dim_p11": self.dim_p11,
            "skew_quotient_dims": self.skew_quotient_dims,
            "frobenius_image_dim": self.frobenius_image_dim,
            "p_map_rank": self.p_map_rank,
            "p_map_nilpotent": self.p_map_nilpotent,
            "omega_exponent": self.omega_exponent,
        })
    }
}

/// Compute the invariant fingerprint of a verified Hopf algebra.
///
/// `cap` bounds the brute-force grouplike search exactly as in
/// [`analysis::grouplikes`] with [`GrouplikeMode::Auto`].
pub fn fingerprint(h: &HopfAlgebra, cap: u64) -> Result<Fingerprint> {
    fingerprint_details(h, cap).map(|(fp, _)| fp)
}

/// Fingerprint plus a flag recording whether the grouplike search was
/// exhaustive. The flag is deliberately not part of the fingerprint: it
/// describes the search, not the algebra.
fn fingerprint_details(h: &HopfAlgebra, cap: u64) -> Result<(Fingerprint, bool)> {
    let fld = h.field();
    let g_like = analysis::grouplikes(h, &GrouplikeMode::Auto { cap })?;
    let flags = analysis::structure_flags(h);
    let antipode_order = analysis::antipode_order(h, None)?;
    let h0 = g_like.span(h);
    let unit = h.unit_element();

    let p11 = analysis::skew_primitives(h, &unit, &unit)?;
    let dim_p11 = p11.dim();

    // Quotient dimensions over all ordered grouplike pairs, remembering
    // which second arguments make P_{1,f} strictly larger than H_0 — those
    // are the candidates for the distinguished character grouplike.
    let elements: Vec<Element> = g_like.elements().to_vec();
    let id_idx = g_like.identity_index();
    let mut skew_quotient_dims = Vec::with_capacity(elements.len() * elements.len());
    let mut distinguished: Option<usize> = None;
    for (a_idx, a) in elements.iter().enumerate() {
        for (b_idx, b) in elements.iter().enumerate() {
            let space = analysis::skew_primitives(h, a, b)?;
            let q = space.quotient_dim(&h0)?;
            skew_quotient_dims.push(q);
            if a_idx == id_idx && b_idx != id_idx && q > 0 && distinguished.is_none() {
                distinguished = Some(b_idx);
            }
        }
    }
    skew_quotient_dims.sort_unstable();

    let frobenius_image_dim = if flags.commutative && fld.degree() == 1 {
        Some(analysis::frobenius_profile(h)?.image_dim)
    } else {
        None
    };

    let (p_map_rank, p_map_nilpotent) = if fld.degree() == 1 && dim_p11 > 0 {
        match analysis::p_map_on_primitives(h, &p11) {
            Ok(profile) => (Some(profile.rank), Some(profile.nilpotent)),
            // Not defined when the primitives fail to commute or the map
            // leaves the primitive space; both are legitimate outcomes.
            Err(Error::InvalidAlgebra(_)) | Err(Error::PMapEscapes) => (None, None),
            Err(e) => return Err(e),
        }
    } else {
        (None, None)
    };

    // The discrete log is only meaningful in the multiplicative regime,
    // where conjugation by grouplikes acts by eigenvalues.
    let multiplicative = g_like.len() as u64 % fld.characteristic() != 0;
    let omega_exponent = match distinguished {
        Some(b_idx) if multiplicative => {
            character_exponent(h, &g_like, &unit, &elements[b_idx], b_idx)?
        }
        _ => None,
    };

    let fp = Fingerprint {
        dim: h.dim(),
        field_char: fld.characteristic(),
        n_grouplikes: g_like.len(),
        grouplike_exponent: g_like.exponent(),
        commutative: flags.commutative,
        cocommutative: flags.cocommutative,
        antipode_order,
        dim_p11,
        skew_quotient_dims,
        frobenius_image_dim,
        p_map_rank,
        p_map_nilpotent,
        omega_exponent,
    };
    Ok((fp, g_like.complete()))
}

/// Discrete log of the conjugation eigenvalue at `f`, base the canonical
/// primitive root of unity of order `ord(f)`. `None` when no eigen witness
/// or no root of the needed order exists — both mean "no canonical
/// exponent", not an error.
fn character_exponent(
    h: &HopfAlgebra,
    g_like: &analysis::GrouplikeGroup,
    unit: &Element,
    f: &Element,
    f_idx: usize,
) -> Result<Option<u64>> {
    let fld = h.field();
    let witness = match analysis::canonical_character_witness(h, g_like, unit, f) {
        Ok(w) => w,
        Err(Error::NoCharacterWitness) => return Ok(None),
        Err(e) => return Err(e),
    };
    let ch = analysis::conjugation_character(h, g_like, unit, f, &witness)?;
    if ch.additive {
        return Ok(None);
    }
    let value = &ch.values[f_idx];
    let m = g_like.order_of(f_idx) as u64;
    let zeta = match fld.primitive_root_of_unity(m) {
        Ok(z) => z,
        Err(Error::NoRootOfUnity { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    for e in 0..m {
        if fld.pow(&zeta, e) == *value {
            return Ok(Some(e));
        }
    }
    // value generates a subgroup of the cyclic group generated by zeta, so
    // the scan above cannot miss.
    unreachable!("character value is not a power of the canonical root");
}

/// Outcome of matching an algebra against the reference families of its
/// dimension and characteristic.
#[derive(Clone, Debug)]
pub struct TypeVerdict {
    /// Name of the unique matching reference type, if any.
    pub matched: Option<String>,
    pub fingerprint: Fingerprint,
    /// The calibration table: every reference type of this dimension and
    /// characteristic regime with its fingerprint, in canonical order.
    pub calibration: Vec<(String, Fingerprint)>,
    /// Always true when classification returns: pairwise-distinct
    /// calibration rows are a precondition for answering at all.
    pub calibration_distinct: bool,
    pub note: String,
}

impl TypeVerdict {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .calibration
            .iter()
            .map(|(name, fp)| json!({ "type": name, "fingerprint": fp.to_json() }))
            .collect();
        json!({
            "matched": self.matched.as_deref().unwrap_or("unknown"),
            "fingerprint": self.fingerprint.to_json(),
            "calibration_distinct": self.calibration_distinct,
            "calibration": rows,
            "note": self.note,
        })
    }
}

/// Identify which reference type the given Hopf algebra is.
///
/// The input must satisfy all Hopf axioms and have dimension p² for a
/// prime p. When the field characteristic equals p the field must be
/// prime (the characteristic-p classification lives over F_p); away from
/// characteristic p any finite field works. The reference families are
/// rebuilt and re-fingerprinted on every call and must be pairwise
/// distinct, otherwise [`Error::CalibrationCollision`] is returned.
pub fn classify(h: &HopfAlgebra, cap: u64) -> Result<TypeVerdict> {
    let report = h.verify_axioms();
    if !report.all_pass() {
        return Err(Error::AxiomsFailed(Box::new(report)));
    }

    let dim = h.dim();
    let mut p = 0usize;
    while (p + 1) * (p + 1) <= dim {
        p += 1;
    }
    if p * p != dim || !is_prime(p as u64) {
        return Err(Error::DimensionNotPSquared { dim });
    }
    let p = p as u64;

    let fld = h.field();
    let ids = if fld.characteristic() == p {
        if fld.degree() != 1 {
            return Err(Error::ClassifyNeedsPrimeField {
                degree: fld.degree(),
            });
        }
        families::all_char_p(p)?
    } else {
        families::all_char_ne_p(p, fld)?
    };

    let (fp, input_complete) = fingerprint_details(h, cap)?;
    let (calibration, calib_complete) = fingerprint_family_set(&ids, cap)?;

    let matched = calibration
        .iter()
        .find(|(_, c)| *c == fp)
        .map(|(name, _)| name.clone());

    let mut note = format!(
        "matched against {} reference classes fingerprinted in this run",
        calibration.len()
    );
    if !input_complete || !calib_complete {
        note.push_str(
            "; the grouplike search scanned a candidate subset rather than \
             the whole space, so grouplike counts assume no grouplikes \
             outside the scanned vectors",
        );
    }

    Ok(TypeVerdict {
        matched,
        fingerprint: fp,
        calibration,
        calibration_distinct: true,
        note,
    })
}

/// Build and fingerprint every listed family, requiring pairwise-distinct
/// results. Returns the named rows plus whether every grouplike search was
/// exhaustive.
fn fingerprint_family_set(ids: &[FamilyId], cap: u64) -> Result<(Vec<(String, Fingerprint)>, bool)> {
    let mut rows: Vec<(String, Fingerprint)> = Vec::with_capacity(ids.len());
    let mut all_complete = true;
    for id in ids {
        let h = families::build(id)?;
        let (fp, complete) = fingerprint_details(&h, cap)?;
        all_complete &= complete;
        rows.push((id.display_name(), fp));
    }
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            if rows[i].1 == rows[j].1 {
                return Err(Error::CalibrationCollision(
                    rows[i].0.clone(),
                    rows[j].0.clone(),
                ));
            }
        }
    }
    Ok((rows, all_complete))
}

/// The calibration table on its own, for reporting: every reference type of
/// dimension p² in the requested regime with its fingerprint. Pass `None`
/// for the characteristic-p table over F_p, or a field of characteristic
/// different from p for the other regime.
pub fn calibration_rows(
    p: u64,
    field: Option<&FieldSpec>,
    cap: u64,
) -> Result<Vec<(String, Fingerprint)>> {
    let ids = match field {
        None => families::all_char_p(p)?,
        Some(f) => {
            if f.characteristic() == p {
                return Err(Error::RootInOwnCharacteristic { p });
            }
            families::all_char_ne_p(p, f)?
        }
    };
    fingerprint_family_set(&ids, cap).map(|(rows, _)| rows)
}

/// Render calibration rows as a Markdown table.
pub fn report_markdown(rows: &[(String, Fingerprint)]) -> String {
    let mut out = String::new();
    out.push_str(
        "| type | dim | char | #G | exp G | comm | cocomm | ord S | dim P(1,1) \
         | skew quotients | Frob rank | p-map rank | p-map nilp | omega exp |\n",
    );
    out.push_str(
        "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n",
    );
    for (name, fp) in rows {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let opt_usize = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
        let opt_bool = |o: Option<bool>| o.map_or("-".to_string(), |v| yn(v).to_string());
        let opt_u64 = |o: Option<u64>| o.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
            name,
            fp.dim,
            fp.field_char,
            fp.n_grouplikes,
            fp.grouplike_exponent,
            yn(fp.commutative),
            yn(fp.cocommutative),
            fp.antipode_order,
            fp.dim_p11,
            run_length(&fp.skew_quotient_dims),
            opt_usize(fp.frobenius_image_dim),
            opt_usize(fp.p_map_rank),
            opt_bool(fp.p_map_nilpotent),
            opt_u64(fp.omega_exponent),
        ));
    }
    out
}

/// Render calibration rows as a JSON array of `{type, fingerprint}` objects.
pub fn report_json(rows: &[(String, Fingerprint)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(name, fp)| json!({ "type": name, "fingerprint": fp.to_json() }))
            .collect(),
    )
}

/// Compress a sorted multiset like `[0,0,0,1,1]` to `0^3,1^2`.
fn run_length(dims: &[usize]) -> String {
    if dims.is_empty() {
        return "-".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < dims.len() {
        let mut j = i;
        while j < dims.len() && dims[j] == dims[i] {
            j += 1;
        }
        if j - i == 1 {
            parts.push(format!("{}", dims[i]));
        } else {
            parts.push(format!("{}^{}", dims[i], j - i));
        }
        i = j;
    }
    parts.join(",")
}
