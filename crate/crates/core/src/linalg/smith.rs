use std::collections::{BTreeSet, HashMap};

use super::{CoefficientRing, SparseMatrix};
use crate::error::{Error, Result};

type Vec128 = Vec<(usize, i128)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub rank: usize,
    /// Elementary divisors greater than 1.
    pub torsion: Vec<i128>,
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn lin(a: i128, x: &[(usize, i128)], b: i128, y: &[(usize, i128)]) -> Result<Vec128> {
    let ovf = || Error::Overflow("integer elimination");
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (k, v) = if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, a.checked_mul(x[i - 1].1).ok_or_else(ovf)?)
        } else if i == x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, b.checked_mul(y[j - 1].1).ok_or_else(ovf)?)
        } else {
            i += 1;
            j += 1;
            let s = a
                .checked_mul(x[i - 1].1)
                .and_then(|u| b.checked_mul(y[j - 1].1).and_then(|w| u.checked_add(w)))
                .ok_or_else(ovf)?;
            (x[i - 1].0, s)
        };
        if v != 0 {
            out.push((k, v));
        }
    }
    Ok(out)
}

/// Echelon form of the column lattice of `a` under unimodular operations.
fn integer_echelon(a: &SparseMatrix) -> Result<Vec<Vec128>> {
    let mut rows: Vec<Vec128> = Vec::new();
    let mut by_lead: HashMap<usize, usize> = HashMap::new();
    for c in a.columns() {
        let mut v: Vec128 = c.iter().map(|&(i, x)| (i, x as i128)).collect();
        while let Some(&(lead, x)) = v.first() {
            let Some(&k) = by_lead.get(&lead) else { break };
            let p = &rows[k];
            let y = p[0].1;
            if x % y == 0 {
                v = lin(1, &v, -(x / y), p)?;
            } else {
                let (g, s, t) = ext_gcd(x, y);
                let new_pivot = lin(s, &v, t, p)?;
                v = lin(y / g, &v, -(x / g), p)?;
                rows[k] = new_pivot;
            }
        }
        if !v.is_empty() {
            by_lead.insert(v[0].0, rows.len());
            rows.push(v);
        }
    }
    Ok(rows)
}

/// Nonzero elementary divisors of `a`, in divisibility order.
pub fn elementary_divisors(a: &SparseMatrix) -> Result<Vec<i128>> {
    let rows = integer_echelon(a)?;
    if rows.iter().all(|r| r[0].1.abs() == 1) {
        return Ok(vec![1; rows.len()]);
    }
    let support: BTreeSet<usize> = rows.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    let pos: HashMap<usize, usize> = support.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut dense = vec![vec![0i128; support.len()]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for &(i, v) in row {
            dense[r][pos[&i]] = v;
        }
    }
    smith_diagonal_dense(dense)
}

/// Diagonal of the Smith normal form (nonzero entries only, positive).
pub fn smith_diagonal_dense(mut m: Vec<Vec<i128>>) -> Result<Vec<i128>> {
    let nr = m.len();
    let nc = m.first().map_or(0, |r| r.len());
    let ovf = || Error::Overflow("smith normal form");
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // smallest nonzero magnitude; ties by row then column
        let mut best: Option<(i128, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|b| v.abs() < b.0) {
                    best = Some((v.abs(), i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..nr {
                let q = m[i][t].div_euclid(p);
                if q != 0 {
                    for j in t..nc {
                        m[i][j] = m[i][j].checked_sub(q.checked_mul(m[t][j]).ok_or_else(ovf)?).ok_or_else(ovf)?;
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..nc {
                let q = m[t][j].div_euclid(p);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] = row[j].checked_sub(q.checked_mul(row[t]).ok_or_else(ovf)?).ok_or_else(ovf)?;
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if dirty {
                // a smaller remainder exists in row/column t: move it to the pivot
                let mut best = (p.abs(), t, t);
                for i in t + 1..nr {
                    if m[i][t] != 0 && m[i][t].abs() < best.0 {
                        best = (m[i][t].abs(), i, t);
                    }
                }
                for j in t + 1..nc {
                    if m[t][j] != 0 && m[t][j].abs() < best.0 {
                        best = (m[t][j].abs(), t, j);
                    }
                }
                m.swap(t, best.1);
                for row in m.iter_mut() {
                    row.swap(t, best.2);
                }
                continue;
            }
            // enforce divisibility of the remaining block
            let bad = (t + 1..nr).find(|&i| (t + 1..nc).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..nc {
                        m[t][j] = m[t][j].checked_add(m[i][j]).ok_or_else(ovf)?;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Ok(diag)
}

/// Homology at the middle of `d_out ∘ d_in` over ℤ.
pub fn smith_homology(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<Homology> {
    if d_in.nrows() != d_out.ncols() {
        return Err(Error::DimensionMismatch(format!(
            "middle dimension {} vs {}",
            d_in.nrows(),
            d_out.ncols()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::NotAComplex("boundary composite is nonzero".into()));
    }
    let r_out = super::rank(d_out, CoefficientRing::Rationals)?;
    let divisors = elementary_divisors(d_in)?;
    Ok(Homology {
        rank: d_in.nrows() - r_out - divisors.len(),
        torsion: divisors.into_iter().filter(|&d| d != 1).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Simplicial boundary matrix for faces given as sorted vertex lists.
    fn boundary(faces: &[Vec<usize>], lower: &[Vec<usize>]) -> SparseMatrix {
        let idx: HashMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let cols = faces
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|k| {
                        let mut g = f.clone();
                        g.remove(k);
                        (idx[&g], if k % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(lower.len(), cols).unwrap()
    }

    #[test]
    fn zero_maps() {
        let h = smith_homology(&SparseMatrix::zero(4, 0), &SparseMatrix::zero(0, 4)).unwrap();
        assert_eq!(h, Homology { rank: 4, torsion: vec![] });
    }

    #[test]
    fn hollow_triangle() {
        let v: Vec<Vec<usize>> = (0..3).map(|i| vec![i]).collect();
        let e = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        let d1 = boundary(&e, &v);
        let h1 = smith_homology(&SparseMatrix::zero(3, 0), &d1).unwrap();
        assert_eq!(h1, Homology { rank: 1, torsion: vec![] });
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // six-vertex triangulation of RP²
        let tris: Vec<Vec<usize>> = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ]
        .iter()
        .map(|t| t.to_vec())
        .collect();
        let mut edges: Vec<Vec<usize>> = tris
            .iter()
            .flat_map(|t| [vec![t[0], t[1]], vec![t[0], t[2]], vec![t[1], t[2]]])
            .collect();
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), 15);
        let verts: Vec<Vec<usize>> = (0..6).map(|i| vec![i]).collect();
        let d2 = boundary(&tris, &edges);
        let d1 = boundary(&edges, &verts);
        let h1 = smith_homology(&d2, &d1).unwrap();
        assert_eq!(h1, Homology { rank: 0, torsion: vec![2] });
        let h2 = smith_homology(&SparseMatrix::zero(10, 0), &d2).unwrap();
        assert_eq!(h2.rank, 0);
    }

    #[test]
    fn not_a_complex() {
        let a = SparseMatrix::identity(2);
        assert!(matches!(smith_homology(&a, &a), Err(Error::NotAComplex(_))));
    }

    #[test]
    fn dense_snf() {
        let d = smith_diagonal_dense(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]).unwrap();
        assert_eq!(d, vec![2, 6, 12]);
        let d = smith_diagonal_dense(vec![vec![2, 3]]).unwrap();
        assert_eq!(d, vec![1]);
        let m = SparseMatrix::from_dense(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(elementary_divisors(&m).unwrap(), vec![1, 6]);
    }
}

#[cfg(test)]
mod props {
    use super::super::echelon::gcd;
    use super::*;
    use proptest::prelude::*;

    fn det_gcd_k(m: &[Vec<i128>], k: usize) -> i128 {
        // gcd of all k×k minors, brute force (small sizes only)
        fn det(a: Vec<Vec<i128>>) -> i128 {
            let n = a.len();
            if n == 0 {
                return 1;
            }
            let mut s = 0;
            for j in 0..n {
                if a[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> =
                    a[1..].iter().map(|r| r.iter().enumerate().filter(|e| e.0 != j).map(|e| *e.1).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                s += sign * a[0][j] * det(minor);
            }
            s
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let mut g = 0;
        for rs in subsets(m.len(), k) {
            for cs in subsets(m[0].len(), k) {
                let sub = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                g = gcd(g, det(sub));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn divisors_match_minor_gcds(rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 1..4)) {
            let a = SparseMatrix::from_dense(&rows);
            let d = elementary_divisors(&a).unwrap();
            let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            for w in d.windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            let mut prod = 1;
            for (k, &dk) in d.iter().enumerate() {
                prod *= dk;
                prop_assert_eq!(prod, det_gcd_k(&m, k + 1));
            }
            if d.len() < m.len().min(3) {
                prop_assert_eq!(det_gcd_k(&m, d.len() + 1), 0);
            }
        }
    }
}
