//! Buchberger's algorithm on sparse module vectors.
//!
//! A vector is a list of `(position, monomial, coefficient)` terms sorted
//! descending under position-over-term: a smaller position is larger, and
//! within one position the ring's monomial order decides. An ideal is the
//! rank one case. Pair handling follows Gebauer–Möller; the product
//! criterion is only sound for ideals and is switched off for modules.

use std::cmp::Ordering;

use crate::coeffs::Field;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingRef};

pub(crate) type VTerm<F> = (usize, Monomial, F);

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vector<F: Field> {
    pub terms: Vec<VTerm<F>>,
}

pub(crate) fn pot_cmp(
    order: &MonomialOrder,
    a: (usize, &Monomial),
    b: (usize, &Monomial),
) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<(usize, &Monomial, &F)> {
        self.terms.first().map(|(p, m, c)| (*p, m, c))
    }

    pub fn from_polynomial(p: &Polynomial<F>, pos: usize) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|(m, c)| (pos, m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Builds a vector from per-position polynomials (all in one ring).
    pub fn from_components(comps: &[(usize, &Polynomial<F>)]) -> Self {
        let mut sorted: Vec<(usize, &Polynomial<F>)> = comps.to_vec();
        sorted.sort_by_key(|(p, _)| *p);
        let mut terms = Vec::new();
        for (p, poly) in sorted {
            terms.extend(poly.terms().iter().map(|(m, c)| (p, m.clone(), c.clone())));
        }
        Vector { terms }
    }

    pub fn component(&self, ring: &RingRef<F>, pos: usize) -> Polynomial<F> {
        let terms: Vec<(Monomial, F)> = self
            .terms
            .iter()
            .filter(|(p, _, _)| *p == pos)
            .map(|(_, m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::from_sorted(ring, terms)
    }

    pub fn has_position(&self, pos: usize) -> bool {
        self.terms.iter().any(|(p, _, _)| *p == pos)
    }

    pub fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &F) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(p, m, a)| (*p, m.clone(), a.mul_ref(c)))
                .collect(),
        }
    }

    /// Primitive integral form for fields of fractions, monic otherwise.
    pub fn normalized(&self) -> Self {
        let coeffs: Vec<&F> = self.terms.iter().map(|(_, _, c)| c).collect();
        match F::content_scale(&coeffs) {
            Some(s) if s.is_one() => self.clone(),
            Some(s) => self.scale(&s),
            None => self.monic(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some((_, _, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, c: &F, m: &Monomial, other: &Self, order: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(p, tm, tc)| (*p, tm.mul(m), tc.mul_ref(c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ap, am, _)), Some((bp, bm, _))) => {
                    match pot_cmp(order, (*ap, am), (*bp, bm)) {
                        Ordering::Greater => out.push(a.next().unwrap().clone()),
                        Ordering::Less => out.push(b.next().unwrap()),
                        Ordering::Equal => {
                            let (ap, am, ac) = a.next().unwrap();
                            let (_, _, bc) = b.next().unwrap();
                            let s = ac.add_ref(&bc);
                            if !s.is_zero() {
                                out.push((*ap, am.clone(), s));
                            }
                        }
                    }
                }
            }
        }
        Vector { terms: out }
    }
}

/// Full reduction of `v` by a list of monic vectors.
pub(crate) fn reduce<F: Field>(
    v: &Vector<F>,
    basis: &[&Vector<F>],
    order: &MonomialOrder,
) -> Vector<F> {
    let mut rest = v.clone();
    let mut out: Vec<VTerm<F>> = Vec::new();
    while let Some((pos, lm, lc)) = rest.lead() {
        let hit = basis.iter().find_map(|g| {
            let (gp, gm, _) = g.lead().expect("basis vectors are nonzero");
            if gp == pos {
                lm.div(gm).map(|q| (q, *g))
            } else {
                None
            }
        });
        match hit {
            Some((q, g)) => {
                let c = lc.neg_ref();
                rest = rest.add_scaled(&c, &q, g, order);
            }
            None => {
                let t = rest.terms.remove(0);
                out.push(t);
            }
        }
    }
    Vector { terms: out }
}

/// Reduction by vectors that need not be monic. Over fields of fractions
/// the work stays fraction-free: `v` is multiplied by the divisor's leading
/// coefficient instead of dividing by it. With `full`, tails are reduced too.
/// The result is normalized.
fn reduce_ff<F: Field>(
    v: &Vector<F>,
    basis: &[&Vector<F>],
    order: &MonomialOrder,
    full: bool,
) -> Vector<F> {
    let mut rest = v.normalized();
    let mut out: Vec<VTerm<F>> = Vec::new();
    while let Some((pos, lm, lc)) = rest.lead() {
        let hit = basis.iter().find_map(|g| {
            let (gp, gm, _) = g.lead().expect("basis vectors are nonzero");
            if gp == pos {
                lm.div(gm).map(|q| (q, *g))
            } else {
                None
            }
        });
        match hit {
            Some((q, g)) => {
                let gc = g.lead().unwrap().2;
                if gc.is_one() {
                    rest = rest.add_scaled(&lc.neg_ref(), &q, g, order);
                } else if F::content_scale(&[gc]).is_some() {
                    let c = lc.neg_ref();
                    rest = rest.scale(gc).add_scaled(&c, &q, g, order);
                    for t in out.iter_mut() {
                        t.2 = t.2.mul_ref(gc);
                    }
                } else {
                    let c = lc.neg_ref() / gc.clone();
                    rest = rest.add_scaled(&c, &q, g, order);
                }
                let coeffs: Vec<&F> = out.iter().chain(&rest.terms).map(|t| &t.2).collect();
                if let Some(s) = F::content_scale(&coeffs).filter(|s| !s.is_one()) {
                    rest = rest.scale(&s);
                    for t in out.iter_mut() {
                        t.2 = t.2.mul_ref(&s);
                    }
                }
            }
            None if full => {
                let t = rest.terms.remove(0);
                out.push(t);
            }
            None => break,
        }
    }
    out.extend(rest.terms);
    Vector { terms: out }.normalized()
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Element<F: Field> {
    vec: Vector<F>,
    sugar: u32,
    active: bool,
}

/// Reduced Gröbner basis of the submodule generated by `gens`. Output is
/// monic, interreduced, and sorted ascending by leading term.
///
/// With `values_only`, only the position 0 part is completed: vectors whose
/// leading term moves past position 0 are dropped, so the other positions
/// just record how each basis element arises from the input. The product
/// criterion is then sound and is used.
pub(crate) fn groebner<F: Field>(
    gens: Vec<Vector<F>>,
    order: &MonomialOrder,
    values_only: bool,
) -> Vec<Vector<F>> {
    let product_criterion = values_only;
    let keep = |v: &Vector<F>| !v.is_zero() && (!values_only || v.lead().unwrap().0 == 0);
    let mut elems: Vec<Element<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut gens: Vec<Vector<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by(|a, b| {
        let (ap, am, _) = a.lead().unwrap();
        let (bp, bm, _) = b.lead().unwrap();
        pot_cmp(order, (ap, am), (bp, bm))
    });
    gens.reverse();

    for g in gens {
        let sugar = g.max_degree();
        let active: Vec<&Vector<F>> = elems.iter().filter(|e| e.active).map(|e| &e.vec).collect();
        let r = reduce_ff(&g, &active, order, true);
        if keep(&r) {
            insert(&mut elems, &mut pairs, r, sugar, product_criterion);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| pot_cmp(order, (pa.pos, &pa.lcm), (pb.pos, &pb.lcm)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = s_vector(&elems[pair.i].vec, &elems[pair.j].vec, &pair.lcm, order);
        let active: Vec<&Vector<F>> = elems.iter().filter(|e| e.active).map(|e| &e.vec).collect();
        let r = reduce_ff(&s, &active, order, true);
        if keep(&r) {
            insert(&mut elems, &mut pairs, r, pair.sugar, product_criterion);
        }
    }

    let mut basis: Vec<Vector<F>> = elems
        .into_iter()
        .filter(|e| e.active)
        .map(|e| e.vec)
        .collect();
    basis.sort_by(|a, b| {
        let (ap, am, _) = a.lead().unwrap();
        let (bp, bm, _) = b.lead().unwrap();
        pot_cmp(order, (ap, am), (bp, bm))
    });
    interreduce(basis, order)
}

fn interreduce<F: Field>(basis: Vec<Vector<F>>, order: &MonomialOrder) -> Vec<Vector<F>> {
    let mut out = basis.clone();
    for k in 0..basis.len() {
        let others: Vec<&Vector<F>> = out
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, v)| v)
            .collect();
        out[k] = reduce_ff(&out[k], &others, order, true);
    }
    for v in out.iter_mut() {
        *v = v.monic();
    }
    out
}

pub(crate) fn s_vector<F: Field>(
    a: &Vector<F>,
    b: &Vector<F>,
    lcm: &Monomial,
    order: &MonomialOrder,
) -> Vector<F> {
    let (_, am, _) = a.lead().unwrap();
    let (_, bm, _) = b.lead().unwrap();
    let qa = lcm.div(am).unwrap();
    let qb = lcm.div(bm).unwrap();
    let (ca, cb) = (&a.terms[0].2, &b.terms[0].2);
    Vector::zero()
        .add_scaled(cb, &qa, a, order)
        .add_scaled(&ca.neg_ref(), &qb, b, order)
}

fn insert<F: Field>(
    elems: &mut Vec<Element<F>>,
    pairs: &mut Vec<Pair>,
    h: Vector<F>,
    sugar: u32,
    product_criterion: bool,
) {
    let hi = elems.len();
    let (hp, hm, _) = h.lead().unwrap();
    let hm = hm.clone();

    // Candidate pairs with the new element, one per active partner.
    let mut cands: Vec<(usize, Monomial, bool)> = elems
        .iter()
        .enumerate()
        .filter(|(_, e)| e.active && e.vec.lead().unwrap().0 == hp)
        .map(|(i, e)| {
            let gm = e.vec.lead().unwrap().1;
            (i, hm.lcm(gm), product_criterion && hm.is_coprime(gm))
        })
        .collect();

    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some((i, l, coprime)) = cands.pop() {
        let dominated = cands.iter().any(|(_, l2, _)| l2.divides(&l))
            || kept.iter().any(|(_, l2, _)| l2.divides(&l));
        if coprime || !dominated {
            kept.push((i, l, coprime));
        }
    }

    // Chain criterion on existing pairs.
    pairs.retain(|p| {
        if p.pos != hp || !hm.divides(&p.lcm) {
            return true;
        }
        let li = elems[p.i].vec.lead().unwrap().1.lcm(&hm);
        let lj = elems[p.j].vec.lead().unwrap().1.lcm(&hm);
        li == p.lcm || lj == p.lcm
    });

    for (i, l, coprime) in kept {
        if coprime {
            continue;
        }
        let gi = &elems[i];
        let gm = gi.vec.lead().unwrap().1;
        let s1 = gi.sugar + l.degree() - gm.degree();
        let s2 = sugar + l.degree() - hm.degree();
        pairs.push(Pair {
            i,
            j: hi,
            pos: hp,
            lcm: l,
            sugar: s1.max(s2),
        });
    }

    for e in elems.iter_mut() {
        if e.active {
            let (gp, gm, _) = e.vec.lead().unwrap();
            if gp == hp && hm.divides(gm) {
                e.active = false;
            }
        }
    }
    elems.push(Element {
        vec: h,
        sugar,
        active: true,
    });
}

/// Reduced Gröbner basis of an ideal, in the ring's order.
pub(crate) fn ideal_basis<F: Field>(
    ring: &RingRef<F>,
    gens: &[Polynomial<F>],
) -> Vec<Polynomial<F>> {
    let vecs: Vec<Vector<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Vector::from_polynomial(g, 0))
        .collect();
    groebner(vecs, ring.order(), true)
        .into_iter()
        .map(|v| v.component(ring, 0))
        .collect()
}

/// Normal form of `p` with respect to a reduced basis in `p`'s ring.
pub(crate) fn reduce_polynomial<F: Field>(
    p: &Polynomial<F>,
    basis: &[Polynomial<F>],
) -> Polynomial<F> {
    let ring = p.ring();
    if basis.is_empty() || p.is_zero() {
        return p.clone();
    }
    let mut rest = p.clone();
    let mut out: Vec<(Monomial, F)> = Vec::new();
    while let Some((lm, lc)) = rest.leading_term() {
        let hit = basis
            .iter()
            .find_map(|g| lm.div(g.leading_monomial().unwrap()).map(|q| (q, g)));
        match hit {
            Some((q, g)) => {
                let c = lc.neg_ref() / g.leading_coeff().unwrap().clone();
                rest = rest.add_scaled(&c, &q, g);
            }
            None => {
                let mut ts = rest.into_terms();
                let t = ts.remove(0);
                out.push(t);
                rest = Polynomial::from_sorted(ring, ts);
            }
        }
    }
    Polynomial::from_sorted(ring, out)
}
