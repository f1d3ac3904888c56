//! Row transfer operators built from the vertex weights, and the double-row
//! operator assembled from them.
//!
//! Four single-row operators act on a chain of M sites. The first-family
//! sweeps run site 1 → M with the auxiliary line entering at site 1:
//!
//!   A  — aux enters 0, exits 0 (particle-number conserving)
//!   B  — aux enters 1, exits 0 (creates one particle)
//!
//! The second-family sweeps run site M → 1 with the auxiliary line entering
//! at site M:
//!
//!   Ã  — aux enters 1, exits 1 (conserving)
//!   B̃  — aux enters 1, exits 0 (creates one particle)
//!
//! The double-row operator combines one sweep of each family around the
//! diagonal boundary kernel K = diag(k₀₀, k₁₁):
//!
//!   𝔅(z) = k₀₀ · B̃(z) A(z) + k₁₁ · Ã(z) B(z)
//!
//! Application is a frontier pass: for each input basis word, walk the sites
//! in sweep order keeping a sparse map (aux bit, partial output word) →
//! amplitude, then keep the branches whose auxiliary line exits with the
//! operator's pinned value.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{RefOps, Scalar};

use super::state::{OccupationState, StateVector, MAX_SITES};
use super::weights::{k_weight, l_weight, LKind, OperatorParams, Variant};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpKind {
    A,
    B,
    ATilde,
    BTilde,
}

struct RowPlan {
    family: LKind,
    ascending: bool,
    aux_enter: u8,
    aux_exit: u8,
}

impl OpKind {
    fn plan(self) -> RowPlan {
        match self {
            OpKind::A => RowPlan { family: LKind::First, ascending: true, aux_enter: 0, aux_exit: 0 },
            OpKind::B => RowPlan { family: LKind::First, ascending: true, aux_enter: 1, aux_exit: 0 },
            OpKind::ATilde => {
                RowPlan { family: LKind::Second, ascending: false, aux_enter: 1, aux_exit: 1 }
            }
            OpKind::BTilde => {
                RowPlan { family: LKind::Second, ascending: false, aux_enter: 1, aux_exit: 0 }
            }
        }
    }

    /// How many particles one application adds.
    pub fn particles_created(self) -> u32 {
        match self {
            OpKind::A | OpKind::ATilde => 0,
            OpKind::B | OpKind::BTilde => 1,
        }
    }
}

fn table_key(a_in: u8, s_in: u8, a_out: u8, s_out: u8) -> usize {
    ((a_in as usize) << 3) | ((s_in as usize) << 2) | ((a_out as usize) << 1) | s_out as usize
}

fn site_tables<S: Scalar>(
    family: LKind,
    variant: Variant,
    params: &OperatorParams<S>,
    m: usize,
) -> Result<Vec<Vec<S>>>
where
    for<'a> &'a S: RefOps<S>,
{
    let mut tables = Vec::with_capacity(m);
    for site in 1..=m {
        let mut tbl = Vec::with_capacity(16);
        for key in 0..16u8 {
            let (a_in, s_in, a_out, s_out) = ((key >> 3) & 1, (key >> 2) & 1, (key >> 1) & 1, key & 1);
            tbl.push(l_weight(family, variant, a_in, s_in, a_out, s_out, params, site)?);
        }
        tables.push(tbl);
    }
    Ok(tables)
}

fn accumulate<S: Scalar>(map: &mut BTreeMap<(u8, u32), S>, key: (u8, u32), amp: S)
where
    for<'a> &'a S: RefOps<S>,
{
    if amp.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(amp);
        }
        Entry::Occupied(mut o) => {
            let sum = &*o.get() + &amp;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub fn apply_row_operator<S: Scalar>(
    kind: OpKind,
    variant: Variant,
    params: &OperatorParams<S>,
    input: &StateVector<S>,
) -> Result<StateVector<S>>
where
    for<'a> &'a S: RefOps<S>,
{
    let m = input.m();
    if m > MAX_SITES {
        return Err(Error::invalid("site count", format!("M = {m} exceeds {MAX_SITES}")));
    }
    if variant == Variant::Inhom {
        params.require_alphas(m)?;
    }
    let plan = kind.plan();
    let tables = site_tables(plan.family, variant, params, m)?;
    let order: Vec<usize> =
        if plan.ascending { (1..=m).collect() } else { (1..=m).rev().collect() };

    let mut out = StateVector::zero(m);
    for (state, amp) in input.iter() {
        let bits_in = state.bits();
        let mut frontier: BTreeMap<(u8, u32), S> = BTreeMap::new();
        frontier.insert((plan.aux_enter, 0), amp.clone());
        for &site in &order {
            let s_in = ((bits_in >> (site - 1)) & 1) as u8;
            let tbl = &tables[site - 1];
            let mut next: BTreeMap<(u8, u32), S> = BTreeMap::new();
            for ((a_in, partial), coeff) in frontier {
                for a_out in 0..=1u8 {
                    let conserved = a_in + s_in;
                    if conserved < a_out || conserved - a_out > 1 {
                        continue;
                    }
                    let s_out = conserved - a_out;
                    let w = &tbl[table_key(a_in, s_in, a_out, s_out)];
                    if w.is_zero() {
                        continue;
                    }
                    let bits = partial | ((s_out as u32) << (site - 1));
                    accumulate(&mut next, (a_out, bits), &coeff * w);
                }
            }
            frontier = next;
        }
        for ((aux, bits), coeff) in frontier {
            if aux == plan.aux_exit {
                out.add_term(bits, coeff);
            }
        }
    }
    Ok(out)
}

/// 𝔅(z)|input⟩ = k₀₀ · B̃(z) A(z)|input⟩ + k₁₁ · Ã(z) B(z)|input⟩.
pub fn apply_double_row_b<S: Scalar>(
    variant: Variant,
    params: &OperatorParams<S>,
    input: &StateVector<S>,
) -> Result<StateVector<S>>
where
    for<'a> &'a S: RefOps<S>,
{
    let k00 = k_weight(variant, 0, 0, params)?;
    let k11 = k_weight(variant, 1, 1, params)?;
    let via_a = apply_row_operator(OpKind::A, variant, params, input)?;
    let first = apply_row_operator(OpKind::BTilde, variant, params, &via_a)?;
    let via_b = apply_row_operator(OpKind::B, variant, params, input)?;
    let second = apply_row_operator(OpKind::ATilde, variant, params, &via_b)?;
    first.scaled(&k00).add(&second.scaled(&k11))
}

pub fn double_row_matrix_element<S: Scalar>(
    variant: Variant,
    params: &OperatorParams<S>,
    bra: &OccupationState,
    ket: &OccupationState,
) -> Result<S>
where
    for<'a> &'a S: RefOps<S>,
{
    if bra.m() != ket.m() {
        return Err(Error::SizeMismatch { left: bra.m(), right: ket.m() });
    }
    let image = apply_double_row_b(variant, params, &StateVector::unit(*ket))?;
    Ok(image.coeff(bra))
}

/// A single-row operator with its variant and parameters pinned together.
#[derive(Clone, Debug)]
pub struct OperatorSpec<S> {
    kind: OpKind,
    variant: Variant,
    params: OperatorParams<S>,
}

impl<S: Scalar> OperatorSpec<S>
where
    for<'a> &'a S: RefOps<S>,
{
    pub fn new(kind: OpKind, variant: Variant, params: OperatorParams<S>) -> Result<Self> {
        if variant == Variant::Primed && !params.has_t_inv() {
            return Err(Error::NonInvertible("t"));
        }
        Ok(OperatorSpec { kind, variant, params })
    }

    pub fn kind(&self) -> OpKind {
        self.kind
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn params(&self) -> &OperatorParams<S> {
        &self.params
    }

    pub fn apply(&self, input: &StateVector<S>) -> Result<StateVector<S>> {
        apply_row_operator(self.kind, self.variant, &self.params, input)
    }

    pub fn matrix_element(&self, bra: &OccupationState, ket: &OccupationState) -> Result<S> {
        if bra.m() != ket.m() {
            return Err(Error::SizeMismatch { left: bra.m(), right: ket.m() });
        }
        let image = self.apply(&StateVector::unit(*ket))?;
        Ok(image.coeff(bra))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentT;
    use crate::rational::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn params23() -> OperatorParams<Rational> {
        OperatorParams::new(q(2, 1), q(3, 1)).unwrap()
    }

    fn st(m: usize, bits: u32) -> OccupationState {
        OccupationState::new(m, bits).unwrap()
    }

    #[test]
    fn b_creates_one_particle_from_vacuum() {
        let v = apply_row_operator(
            OpKind::B,
            Variant::Plain,
            &params23(),
            &StateVector::unit(OccupationState::vacuum(1).unwrap()),
        )
        .unwrap();
        assert_eq!(v.num_terms(), 1);
        assert_eq!(v.coeff(&st(1, 1)), Rational::one());
    }

    #[test]
    fn double_row_on_single_site_vacuum() {
        // 𝔅(z)|0> = (tz + 1/z)|1> at M = 1; with z = 2, t = 3 that is 13/2.
        let p = params23();
        let v = apply_double_row_b(Variant::Plain, &p, &StateVector::unit(st(1, 0))).unwrap();
        assert_eq!(v.num_terms(), 1);
        assert_eq!(v.coeff(&st(1, 1)), q(13, 2));
    }

    #[test]
    fn double_row_symbolic_t() {
        // Same element over Laurent polynomials in t: 2·t + 1/2.
        let z = LaurentT::constant(q(2, 1));
        let t = LaurentT::t();
        let p = OperatorParams::new(z, t).unwrap();
        let v = apply_double_row_b(Variant::Plain, &p, &StateVector::unit(st(1, 0))).unwrap();
        let mut expect = LaurentT::monomial(q(2, 1), 1);
        expect = &expect + &LaurentT::constant(q(1, 2));
        assert_eq!(v.coeff(&st(1, 1)), expect);
    }

    #[test]
    fn double_row_two_sites() {
        // <11|𝔅(z)|01> = t²z + t/z; with z = 2, t = 3 that is 39/2.
        // The ket occupies site 2 only, so its word is 0b10.
        let p = params23();
        let me = double_row_matrix_element(Variant::Plain, &p, &st(2, 0b11), &st(2, 0b10)).unwrap();
        assert_eq!(me, q(39, 2));
    }

    #[test]
    fn double_row_primed_single_site() {
        // <1|𝔅'(z)|0> = z/t² + 1/(tz); with z = 2, t = 3 that is 7/18.
        let p = params23();
        let me = double_row_matrix_element(Variant::Primed, &p, &st(1, 1), &st(1, 0)).unwrap();
        assert_eq!(me, q(7, 18));
    }

    #[test]
    fn row_b_against_closed_form() {
        // <1^M|B(z)|one hole at y> = z^{1-y} t^{M-y} at M = 2.
        let p = params23();
        let spec = OperatorSpec::new(OpKind::B, Variant::Plain, p).unwrap();
        let full = OccupationState::full(2).unwrap();
        assert_eq!(spec.matrix_element(&full, &st(2, 0b10)).unwrap(), q(3, 1));
        assert_eq!(spec.matrix_element(&full, &st(2, 0b01)).unwrap(), q(1, 2));
    }

    #[test]
    fn row_btilde_against_closed_form() {
        // <1^M|B̃(z)|one hole at y> = (tz)^{y-1} at M = 2.
        let p = params23();
        let spec = OperatorSpec::new(OpKind::BTilde, Variant::Plain, p).unwrap();
        let full = OccupationState::full(2).unwrap();
        assert_eq!(spec.matrix_element(&full, &st(2, 0b10)).unwrap(), Rational::one());
        assert_eq!(spec.matrix_element(&full, &st(2, 0b01)).unwrap(), q(6, 1));
    }

    #[test]
    fn row_atilde_moves_a_hole() {
        // <hole at 1|Ã(z)|hole at 2> = (t+1)z at M = 2.
        let p = params23();
        let spec = OperatorSpec::new(OpKind::ATilde, Variant::Plain, p).unwrap();
        assert_eq!(spec.matrix_element(&st(2, 0b10), &st(2, 0b01)).unwrap(), q(8, 1));
    }

    #[test]
    fn row_b_fills_one_of_two_holes() {
        // <hole at 1|B(z)|holes at 1,2> = 1/z at M = 2.
        let p = params23();
        let spec = OperatorSpec::new(OpKind::B, Variant::Plain, p).unwrap();
        assert_eq!(spec.matrix_element(&st(2, 0b10), &st(2, 0b00)).unwrap(), q(1, 2));
    }

    #[test]
    fn particle_counting() {
        let p = params23();
        for kind in [OpKind::A, OpKind::B, OpKind::ATilde, OpKind::BTilde] {
            let spec = OperatorSpec::new(kind, Variant::Plain, p.clone()).unwrap();
            for bits in 0u32..8 {
                let input = st(3, bits);
                let image = spec.apply(&StateVector::unit(input)).unwrap();
                for (out, _) in image.iter() {
                    assert_eq!(
                        out.particle_count(),
                        input.particle_count() + kind.particles_created(),
                        "{kind:?} on {input}"
                    );
                }
            }
        }
    }

    #[test]
    fn application_is_linear() {
        let p = params23();
        let a = StateVector::unit(st(2, 0b01)).scaled(&q(2, 5));
        let b = StateVector::unit(st(2, 0b10)).scaled(&q(-7, 3));
        let sum = a.add(&b).unwrap();
        let spec = OperatorSpec::new(OpKind::ATilde, Variant::Plain, p).unwrap();
        let lhs = spec.apply(&sum).unwrap();
        let rhs = spec.apply(&a).unwrap().add(&spec.apply(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inhomogeneities_cancel_at_single_site() {
        // k₀₀ and k₁₁ shift by ∓α₀ and the two branches re-sum to tz + 1/z.
        let alphas = vec![q(5, 7), q(-2, 9)];
        let p = OperatorParams::with_alphas(q(2, 1), q(3, 1), alphas).unwrap();
        let v = apply_double_row_b(Variant::Inhom, &p, &StateVector::unit(st(1, 0))).unwrap();
        assert_eq!(v.coeff(&st(1, 1)), q(13, 2));
    }

    #[test]
    fn inhom_requires_full_alpha_vector() {
        let p = OperatorParams::with_alphas(q(2, 1), q(3, 1), vec![q(1, 1); 2]).unwrap();
        let err = apply_row_operator(
            OpKind::A,
            Variant::Inhom,
            &p,
            &StateVector::<Rational>::unit(st(3, 0)),
        )
        .unwrap_err();
        assert_eq!(err, Error::AlphaCount { needed: 4, got: 2 });
    }

    #[test]
    fn primed_spec_needs_invertible_t() {
        let p = OperatorParams::new(
            LaurentT::constant(q(2, 1)),
            &LaurentT::one() + &LaurentT::t(),
        )
        .unwrap();
        assert_eq!(
            OperatorSpec::new(OpKind::A, Variant::Primed, p).unwrap_err(),
            Error::NonInvertible("t"),
        );
    }
}
