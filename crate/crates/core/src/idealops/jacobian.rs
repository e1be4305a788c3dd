//! Jacobian ideal of a presentation: `D` plus the maximal minors of the
//! Jacobian matrix at codimension size.

use std::collections::HashMap;

use crate::coeffs::Field;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::polyring::Polynomial;

use super::QuotientRingContext;

/// All `c x c` minors of the matrix with the given rows, using every choice
/// of `c` rows and `c` columns.
pub fn minors<F: Field>(rows: &[Vec<Polynomial<F>>], c: usize) -> Vec<Polynomial<F>> {
    let mut out = Vec::new();
    let ncols = rows.first().map_or(0, |r| r.len());
    if c == 0 || c > rows.len() || c > ncols {
        return out;
    }
    for pick in combinations(rows.len(), c) {
        let chosen: Vec<&Vec<Polynomial<F>>> = pick.iter().map(|&i| &rows[i]).collect();
        out.extend(row_minors(&chosen, ncols));
    }
    out
}

/// Every `k x k` minor of a `k`-row matrix, by expansion along the last row
/// over growing column sets.
fn row_minors<F: Field>(rows: &[&Vec<Polynomial<F>>], ncols: usize) -> Vec<Polynomial<F>> {
    let ring = rows[0][0].ring().clone();
    let mut layer: HashMap<u64, Polynomial<F>> = HashMap::new();
    layer.insert(0, Polynomial::one(&ring));
    for row in rows {
        let mut next: HashMap<u64, Polynomial<F>> = HashMap::new();
        for (&set, det) in &layer {
            if det.is_zero() {
                continue;
            }
            for (j, entry) in row.iter().enumerate() {
                if set & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (set >> (j + 1)).count_ones();
                let term = det * entry;
                let slot = next
                    .entry(set | (1 << j))
                    .or_insert_with(|| Polynomial::zero(&ring));
                *slot = if above % 2 == 0 {
                    &*slot + &term
                } else {
                    &*slot - &term
                };
            }
        }
        layer = next;
    }
    let mut keys: Vec<u64> = layer.keys().copied().collect();
    keys.sort_unstable();
    debug_assert!(ncols <= 64);
    keys.into_iter()
        .map(|k| layer.remove(&k).unwrap())
        .filter(|p| !p.is_zero())
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `D + (c x c minors of the Jacobian of D)`, with `c` the codimension of
/// `D`. Minors are reduced modulo `D` and deduplicated. Not radicalized.
pub fn jacobian_test_ideal<F: Field>(ctx: &QuotientRingContext<F>) -> Result<Ideal<F>> {
    let ring = ctx.ring();
    let d = ctx.defining();
    if d.is_unit() {
        return Ok(Ideal::unit(ring));
    }
    let n = ring.nvars();
    let c = n - d.dimension() as usize;
    if c == 0 {
        return Ok(Ideal::unit(ring));
    }
    let rows: Vec<Vec<Polynomial<F>>> = d
        .basis()
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v)).collect())
        .collect();
    let mut gens: Vec<Polynomial<F>> = d.basis().to_vec();
    let mut seen: Vec<Polynomial<F>> = Vec::new();
    for m in minors(&rows, c) {
        let r = ctx.reduce(&m);
        if r.is_zero() {
            continue;
        }
        let key = r.monic();
        if !seen.contains(&key) {
            seen.push(key);
            gens.push(r);
        }
    }
    Ok(Ideal::new(ring, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Rational;
    use crate::polyring::{MonomialOrder, PolyRing, RingRef};

    fn ring(vars: &[&str]) -> RingRef<Rational> {
        PolyRing::new(
            (),
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
        )
        .unwrap()
    }

    /// Determinant by the permutation expansion.
    fn leibniz(m: &[Vec<Polynomial<Rational>>]) -> Polynomial<Rational> {
        let n = m.len();
        let ring = m[0][0].ring().clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut acc = Polynomial::zero(&ring);
        fn inversions(p: &[usize]) -> usize {
            let mut k = 0;
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    if p[i] > p[j] {
                        k += 1;
                    }
                }
            }
            k
        }
        fn permute(k: usize, p: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if k == p.len() {
                f(p);
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                permute(k + 1, p, f);
                p.swap(k, i);
            }
        }
        permute(0, &mut perm, &mut |p| {
            let mut t = Polynomial::one(&ring);
            for (i, &j) in p.iter().enumerate() {
                t = &t * &m[i][j];
            }
            acc = if inversions(p).is_multiple_of(2) {
                &acc + &t
            } else {
                &acc - &t
            };
        });
        acc
    }

    #[test]
    fn minors_match_permutation_expansion() {
        let r = ring(&["x", "y", "z"]);
        let v: Vec<Polynomial<Rational>> = (0..3).map(|i| Polynomial::var(&r, i)).collect();
        let one = Polynomial::one(&r);
        let m = vec![
            vec![v[0].clone(), &v[1] * &v[2], one.clone()],
            vec![&v[0] + &v[1], v[2].clone(), &v[0] * &v[0]],
            vec![one.clone(), &v[1] - &v[2], v[1].clone()],
        ];
        let all = minors(&m, 3);
        assert_eq!(all, vec![leibniz(&m)]);
        let two = minors(&m, 2);
        let sub = vec![
            vec![m[0][0].clone(), m[0][2].clone()],
            vec![m[1][0].clone(), m[1][2].clone()],
        ];
        assert!(two.contains(&leibniz(&sub)));
        assert_eq!(minors(&m, 1).len(), 9);
    }

    #[test]
    fn hypersurface_test_ideals() {
        let r = ring(&["x", "y"]);
        let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let cusp = &(&y * &y) - &x.pow(3);
        let ctx = QuotientRingContext::new(Ideal::new(&r, vec![cusp.clone()]));
        let j = jacobian_test_ideal(&ctx).unwrap();
        let three = Polynomial::from_i64(&r, 3);
        let two = Polynomial::from_i64(&r, 2);
        let expected = Ideal::new(&r, vec![cusp.clone(), &(&three * &x) * &x, &two * &y]);
        assert!(j.same_ideal(&expected));
        assert!(j.same_ideal(&Ideal::new(&r, vec![&x * &x, y.clone()])));

        let conic = &(&(&x * &x) + &(&y * &y)) - &Polynomial::one(&r);
        let ctx = QuotientRingContext::new(Ideal::new(&r, vec![conic]));
        assert!(jacobian_test_ideal(&ctx).unwrap().is_unit());
    }

    #[test]
    fn umbrella_test_ideal() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (
            Polynomial::var(&r, 0),
            Polynomial::var(&r, 1),
            Polynomial::var(&r, 2),
        );
        let f = &(&x * &x) - &(&(&y * &y) * &z);
        let ctx = QuotientRingContext::new(Ideal::new(&r, vec![f.clone()]));
        let j = jacobian_test_ideal(&ctx).unwrap();
        let expected = Ideal::new(&r, vec![f, x.clone(), &y * &z, &y * &y]);
        assert!(j.same_ideal(&expected));
    }

    #[test]
    fn zero_ideal_gives_unit() {
        let r = ring(&["x"]);
        let ctx = QuotientRingContext::new(Ideal::zero(&r));
        assert!(jacobian_test_ideal(&ctx).unwrap().is_unit());
    }
}
