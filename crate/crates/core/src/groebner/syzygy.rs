//! Syzygies and lifts modulo an ambient ideal.
//!
//! Each generator `g_j` is tagged with the unit vector `e_j` and a Gröbner
//! basis of the values is computed while the tags record cofactors.
//! Relations then come from Schreyer's construction: every S-vector of two
//! basis elements, and every input vector, reduces to a pure tag.

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::polyring::{same_ring, Monomial, Polynomial, RingRef};

use super::engine::{self, Vector};
use super::Ideal;

/// Relation vectors `(a_0, .., a_t)` with `sum a_j g_j` in the ambient ideal.
#[derive(Clone, Debug)]
pub struct SyzygyModule<F: Field> {
    rank: usize,
    vectors: Vec<Vec<Polynomial<F>>>,
}

impl<F: Field> SyzygyModule<F> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vectors(&self) -> &[Vec<Polynomial<F>>] {
        &self.vectors
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Whether `v` lies in the span of the vectors plus `ambient * R^rank`.
    pub fn contains(&self, v: &[Polynomial<F>], ambient: &Ideal<F>) -> bool {
        assert_eq!(v.len(), self.rank);
        let ring = ambient.ring();
        let order = ring.order();
        let mut gens: Vec<Vector<F>> = self.vectors.iter().map(|s| to_vector(s, 0)).collect();
        for d in ambient.basis() {
            for j in 0..self.rank {
                gens.push(Vector::from_polynomial(d, j));
            }
        }
        let gb = engine::groebner(gens, order, false);
        let refs: Vec<&Vector<F>> = gb.iter().collect();
        engine::reduce(&to_vector(v, 0), &refs, order).is_zero()
    }
}

fn to_vector<F: Field>(comps: &[Polynomial<F>], offset: usize) -> Vector<F> {
    let parts: Vec<(usize, &Polynomial<F>)> = comps
        .iter()
        .enumerate()
        .map(|(j, p)| (j + offset, p))
        .collect();
    Vector::from_components(&parts)
}

/// Gröbner basis of the values of `{(g_j, e_j)} ∪ {(d, 0) : d in ambient}`;
/// position 0 carries the value, position `j + 1` the coefficient of `g_j`.
fn tagged_inputs<F: Field>(gens: &[Polynomial<F>], ambient: &Ideal<F>) -> Vec<Vector<F>> {
    let one = Polynomial::one(ambient.ring());
    let mut vecs: Vec<Vector<F>> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| Vector::from_components(&[(0, g), (j + 1, &one)]))
        .collect();
    vecs.extend(
        ambient
            .basis()
            .iter()
            .map(|d| Vector::from_polynomial(d, 0)),
    );
    vecs
}

/// Tag parts of the Schreyer relations: input vectors and S-vectors of all
/// pairs of basis elements, reduced until the value vanishes.
fn schreyer_relations<F: Field>(
    inputs: Vec<Vector<F>>,
    order: &crate::polyring::MonomialOrder,
) -> Vec<Vector<F>> {
    let gb = engine::groebner(inputs.clone(), order, true);
    let refs: Vec<&Vector<F>> = gb.iter().collect();
    let mut out: Vec<Vector<F>> = Vec::new();
    let mut push = |v: Vector<F>| {
        debug_assert!(!v.has_position(0));
        if !v.is_zero() {
            out.push(v);
        }
    };
    for v in &inputs {
        push(engine::reduce(v, &refs, order));
    }
    for (a, va) in gb.iter().enumerate() {
        for vb in &gb[a + 1..] {
            let (_, ma, _) = va.lead().unwrap();
            let (_, mb, _) = vb.lead().unwrap();
            let s = engine::s_vector(va, vb, &ma.lcm(mb), order);
            push(engine::reduce(&s, &refs, order));
        }
    }
    out
}

fn check_ring<F: Field>(ring: &RingRef<F>, polys: &[Polynomial<F>]) -> Result<()> {
    if polys.iter().any(|p| !same_ring(p.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Generators of the relations among `gens` over `ring / ambient`.
/// Components are reduced modulo the ambient ideal; relations that vanish
/// there are dropped.
pub fn syzygies<F: Field>(gens: &[Polynomial<F>], ambient: &Ideal<F>) -> Result<SyzygyModule<F>> {
    let ring = ambient.ring();
    check_ring(ring, gens)?;
    let rank = gens.len();
    let mut vectors: Vec<Vec<Polynomial<F>>> = Vec::new();
    for v in schreyer_relations(tagged_inputs(gens, ambient), ring.order()) {
        let comps: Vec<Polynomial<F>> = (0..rank)
            .map(|j| ambient.normal_form(&v.component(ring, j + 1)))
            .collect();
        if comps.iter().all(|c| c.is_zero()) {
            continue;
        }
        let comps = primitive(comps);
        if !vectors.contains(&comps) {
            vectors.push(comps);
        }
    }
    Ok(SyzygyModule { rank, vectors })
}

/// The vector scaled so that its first nonzero entry is monic.
fn primitive<F: Field>(comps: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let Some(lc) = comps.iter().find_map(|c| c.leading_coeff()) else {
        return comps;
    };
    let s = lc.inv().expect("nonzero");
    comps.iter().map(|c| c.scale(&s)).collect()
}

/// Coefficients `c_j` with `p - sum c_j g_j` in the ambient ideal.
pub fn lift<F: Field>(
    p: &Polynomial<F>,
    gens: &[Polynomial<F>],
    ambient: &Ideal<F>,
) -> Result<Vec<Polynomial<F>>> {
    let ring = ambient.ring();
    check_ring(ring, gens)?;
    check_ring(ring, std::slice::from_ref(p))?;
    let gb = engine::groebner(tagged_inputs(gens, ambient), ring.order(), true);
    let refs: Vec<&Vector<F>> = gb.iter().collect();
    let rem = engine::reduce(&Vector::from_polynomial(p, 0), &refs, ring.order());
    if rem.has_position(0) {
        return Err(Error::NotAMember);
    }
    let minus_one = ring.one_coeff().neg_ref();
    Ok((0..gens.len())
        .map(|j| {
            let c = rem
                .component(ring, j + 1)
                .mul_term(&Monomial::one(ring.nvars()), &minus_one);
            ambient.normal_form(&c)
        })
        .collect())
}

/// Generators of `(I : g)` where `I` is given by a basis: the value slot of
/// the relations between `g` and the basis.
pub(crate) fn quotient_by_element<F: Field>(ideal: &Ideal<F>, g: &Polynomial<F>) -> Ideal<F> {
    let ring = ideal.ring();
    let one = Polynomial::one(ring);
    let mut vecs = vec![Vector::from_components(&[(0, g), (1, &one)])];
    vecs.extend(ideal.basis().iter().map(|d| Vector::from_polynomial(d, 0)));
    let mut gens: Vec<Polynomial<F>> = ideal.basis().to_vec();
    gens.extend(
        schreyer_relations(vecs, ring.order())
            .iter()
            .map(|v| v.component(ring, 1)),
    );
    Ideal::new(ring, gens)
}
