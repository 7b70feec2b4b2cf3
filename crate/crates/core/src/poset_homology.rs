//! Order complexes of rank-selected Boolean lattices and of the monomial
//! posets `M_{<x^a}`, with reduced simplicial homology over ℤ or a field.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::{Composition, SkewShape};
use crate::error::{Error, Result};
use crate::linalg::smith::{smith_homology, Homology};
use crate::linalg::{self, CoefficientRing, SparseMatrix, SparseVec};
use crate::monomial::{self, divides, monomials, unpack, Mono};
use crate::report::CheckReport;
use crate::schur_module::realize_weight;
use crate::symfunc;
use crate::veronese::build_resolution;

pub const DEFAULT_ELEMENT_CAP: usize = 2500;
pub const FACE_CAP: usize = 4_000_000;

/// A finite graded poset; `up[k]` lists the elements strictly above `k`.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    pub labels: Vec<u64>,
    pub ranks: Vec<usize>,
    up: Vec<Vec<u32>>,
}

impl FinitePoset {
    /// Sorts by `(rank, label)`; `less(x, y)` must imply `rank x < rank y`.
    pub fn new<F: Fn(u64, u64) -> bool + Sync>(mut elements: Vec<(usize, u64)>, less: F, cap: usize) -> Result<Self> {
        if elements.len() > cap {
            return Err(Error::Resource(format!("{} poset elements exceed the cap {cap}", elements.len())));
        }
        elements.sort_unstable();
        let (ranks, labels): (Vec<usize>, Vec<u64>) = elements.into_iter().unzip();
        let up = (0..labels.len())
            .into_par_iter()
            .map(|i| {
                (i + 1..labels.len())
                    .filter(|&j| ranks[j] > ranks[i] && less(labels[i], labels[j]))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect();
        Ok(FinitePoset { labels, ranks, up })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.up[i].binary_search(&(j as u32)).is_ok()
    }
}

/// Subsets of `[m]` with sizes in `ranks`, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct RankSelectedPoset {
    pub m: usize,
    pub ranks: Vec<usize>,
    pub poset: FinitePoset,
}

impl RankSelectedPoset {
    pub fn new(m: usize, ranks: &[usize]) -> Result<Self> {
        Self::with_cap(m, ranks, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(m: usize, ranks: &[usize], cap: usize) -> Result<Self> {
        if m > 20 {
            return Err(Error::Resource(format!("m = {m} too large for bitmask subsets")));
        }
        if ranks.iter().any(|&k| k > m) {
            return Err(Error::InvalidInput(format!("rank above m = {m}")));
        }
        let mut ranks = ranks.to_vec();
        ranks.sort_unstable();
        ranks.dedup();
        let elements: Vec<(usize, u64)> = (0u64..1 << m)
            .filter(|s| ranks.contains(&(s.count_ones() as usize)))
            .map(|s| (s.count_ones() as usize, s))
            .collect();
        let poset = FinitePoset::new(elements, |a, b| a & b == a && a != b, cap)?;
        Ok(RankSelectedPoset { m, ranks, poset })
    }
}

/// `M_{<x^a}` for `M = S^(d,r)`: monomials `x^b` of `M` with `x^a / x^b` in `R`,
/// `b ≠ a`, ordered by divisibility through `R`.
pub fn monomial_poset_below(d: usize, r: usize, a: Mono, n: usize) -> Result<FinitePoset> {
    let top = monomial::degree(a);
    let mut elements = Vec::new();
    let mut k = r;
    while k < top {
        if (top - k) % d == 0 {
            elements.extend(monomials(n, k)?.into_iter().filter(|&b| divides(b, a)).map(|b| (k, b)));
        }
        k += d;
    }
    FinitePoset::new(elements, |x, y| divides(x, y) && x != y, DEFAULT_ELEMENT_CAP)
}

/// Chains graded by length, with boundary maps including the augmentation
/// `C₀ → C₋₁ = ℤ`.
#[derive(Debug, Clone)]
pub struct OrderComplex {
    /// `faces[k]`: chains with `k+1` elements
    pub faces: Vec<Vec<Vec<u32>>>,
    /// `boundaries[k]: C_k → C_{k−1}`
    pub boundaries: Vec<SparseMatrix>,
}

pub fn build_order_complex(p: &FinitePoset) -> Result<OrderComplex> {
    fn extend(p: &FinitePoset, chain: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, cap: usize) -> Result<()> {
        out.push(chain.clone());
        if out.len() > cap {
            return Err(Error::Resource(format!("more than {cap} chains")));
        }
        let last = *chain.last().expect("nonempty chain") as usize;
        for &next in &p.up[last] {
            chain.push(next);
            extend(p, chain, out, cap)?;
            chain.pop();
        }
        Ok(())
    }
    let per_vertex = (0..p.len() as u32)
        .into_par_iter()
        .map(|v| {
            let mut out = Vec::new();
            extend(p, &mut vec![v], &mut out, FACE_CAP)?;
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut faces: Vec<Vec<Vec<u32>>> = Vec::new();
    for chain in per_vertex.into_iter().flatten() {
        let k = chain.len() - 1;
        if faces.len() <= k {
            faces.resize(k + 1, Vec::new());
        }
        faces[k].push(chain);
    }
    if faces.iter().map(|f| f.len()).sum::<usize>() > FACE_CAP {
        return Err(Error::Resource(format!("more than {FACE_CAP} chains")));
    }
    for f in faces.iter_mut() {
        f.sort_unstable();
    }
    let mut boundaries = Vec::with_capacity(faces.len());
    for k in 0..faces.len() {
        if k == 0 {
            boundaries.push(SparseMatrix::from_columns(1, vec![vec![(0, 1)]; faces[0].len()])?);
            continue;
        }
        let index: HashMap<&[u32], usize> = faces[k - 1].iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let cols: Vec<SparseVec> = faces[k]
            .par_iter()
            .map(|f| {
                let mut col: SparseVec = (0..f.len())
                    .map(|i| {
                        let mut g = f.clone();
                        g.remove(i);
                        (index[g.as_slice()], if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        boundaries.push(SparseMatrix::from_columns(faces[k - 1].len(), cols)?);
    }
    Ok(OrderComplex { faces, boundaries })
}

impl OrderComplex {
    pub fn dim(&self) -> i64 {
        self.faces.len() as i64 - 1
    }

    pub fn num_faces(&self, k: i64) -> usize {
        if k == -1 {
            1
        } else {
            self.faces.get(k as usize).map_or(0, |f| f.len())
        }
    }

    /// `∂_k: C_k → C_{k−1}` for `k ≥ 0`; zero maps off the ends.
    fn boundary(&self, k: i64) -> SparseMatrix {
        if k < 0 {
            SparseMatrix::zero(0, 1)
        } else if let Some(b) = self.boundaries.get(k as usize) {
            b.clone()
        } else {
            SparseMatrix::zero(self.num_faces(k - 1), 0)
        }
    }

    pub fn check_d_squared(&self) -> Result<bool> {
        for k in 1..self.boundaries.len() {
            if !self.boundaries[k - 1].mul(&self.boundaries[k])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Σ (−1)^k #faces_k`, including the empty face.
    pub fn reduced_euler(&self) -> i64 {
        (-1..=self.dim()).map(|k| if k.rem_euclid(2) == 0 { self.num_faces(k) as i64 } else { -(self.num_faces(k) as i64) }).sum()
    }
}

/// Reduced homology `H̃_k` for `k = −1, …, dim`; torsion only over ℤ.
pub fn homology_ranks(c: &OrderComplex, ring: CoefficientRing) -> Result<Vec<(i64, Homology)>> {
    (-1..=c.dim())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|k| {
            let d_out = c.boundary(k);
            let d_in = c.boundary(k + 1);
            let h = match ring {
                CoefficientRing::Integers => smith_homology(&d_in, &d_out)?,
                _ => Homology {
                    rank: c.num_faces(k) - linalg::rank(&d_out, ring)? - linalg::rank(&d_in, ring)?,
                    torsion: Vec::new(),
                },
            };
            Ok((k, h))
        })
        .collect()
}

fn nonzero(h: &[(i64, Homology)]) -> Vec<serde_json::Value> {
    h.iter()
        .filter(|(_, x)| x.rank > 0 || !x.torsion.is_empty())
        .map(|(k, x)| json!([k, x.rank]))
        .collect()
}

fn torsion(h: &[(i64, Homology)]) -> Vec<serde_json::Value> {
    h.iter().filter(|(_, x)| !x.torsion.is_empty()).map(|(k, x)| json!([k, x.torsion])).collect()
}

/// `#SYT` of a ribbon: the `(1,…,1)` weight space of its Schur module.
pub fn specht_dim(alpha: &Composition) -> Result<usize> {
    let m = alpha.size();
    if m > monomial::MAX_VARS {
        return Err(Error::Resource(format!("m = {m} exceeds {} variables", monomial::MAX_VARS)));
    }
    Ok(realize_weight(&SkewShape::ribbon(alpha), m, &vec![1; m], CoefficientRing::Rationals)?.tableaux().len())
}

/// Ranks at the partial sums of `α` give homology only in degree `ℓ−2`,
/// of rank `dim 𝒮^{σ(α)}`, without torsion.
pub fn verify_solomon(alpha: &Composition) -> Result<CheckReport> {
    let m = alpha.size();
    if m > 8 {
        return Err(Error::Resource(format!("m = {m} > 8")));
    }
    let ranks = alpha.partial_sums();
    let p = RankSelectedPoset::new(m, &ranks)?;
    let c = build_order_complex(&p.poset)?;
    let hz = homology_ranks(&c, CoefficientRing::Integers)?;
    let h2 = homology_ranks(&c, CoefficientRing::PrimeField(2))?;
    let spec = specht_dim(alpha)?;
    let top = alpha.len() as i64 - 2;
    Ok(CheckReport::compare(
        "solomon",
        "rank-selected Boolean lattice homology lives in degree ℓ−2 and is the ribbon Specht module",
        json!({"alpha": alpha.to_string(), "ranks": ranks}),
        json!({"homology_z": [[top, spec]], "homology_f2": [[top, spec]], "torsion": [], "d_squared_zero": true}),
        json!({
            "homology_z": nonzero(&hz),
            "homology_f2": nonzero(&h2),
            "torsion": torsion(&hz),
            "d_squared_zero": c.check_d_squared()?,
        }),
    )
    .with_detail(format!("{} elements, {} chains", p.poset.len(), c.faces.iter().map(|f| f.len()).sum::<usize>())))
}

/// `Tor_i^R(M,k)_a ≅ H̃_{i−1}(Δ M_{<x^a})`: the squarefree case against the
/// Specht dimension, and every `a` with `|a| = di+r` in `n ≤ 3` variables
/// against the resolution and the Schur coefficient.
pub fn verify_tor_poset_link(d: usize, r: usize, i: usize, n: usize) -> Result<CheckReport> {
    if d == 0 || r == 0 || i == 0 {
        return Err(Error::InvalidInput("need d, r, i ≥ 1".into()));
    }
    let m = d * i + r;
    if m > 8 {
        return Err(Error::Resource(format!("m = {m} > 8")));
    }
    if n == 0 || n > 3 {
        return Err(Error::InvalidInput("the multidegree sample uses n ≤ 3".into()));
    }
    let shape = Composition::power_then(d, i, r)?;
    let ranks: Vec<usize> = (0..i).map(|k| r + k * d).collect();
    let boolean = RankSelectedPoset::new(m, &ranks)?;
    let hz = homology_ranks(&build_order_complex(&boolean.poset)?, CoefficientRing::Integers)?;
    let spec = specht_dim(&shape)?;

    let s = symfunc::ribbon_schur(&shape, n);
    let window = build_resolution(d, r, n, CoefficientRing::Rationals, i, m)?;
    let gens = &window.blocks.get(&(i, m)).map(|b| b.col_weights.clone()).unwrap_or_default();
    let mut by_weight: BTreeMap<Mono, usize> = BTreeMap::new();
    for &w in gens {
        *by_weight.entry(w).or_insert(0) += 1;
    }
    let mut expected_rows = Vec::new();
    let mut computed_rows = Vec::new();
    for a in monomials(n, m)? {
        let ex = unpack(a, n);
        let coeff = symfunc::coeff_at(&s, &ex);
        let h = homology_ranks(&build_order_complex(&monomial_poset_below(d, r, a, n)?)?, CoefficientRing::Rationals)?;
        let poset_rows: Vec<serde_json::Value> = nonzero(&h);
        let expected_poset = if coeff > 0 { vec![json!([i as i64 - 1, coeff])] } else { Vec::new() };
        expected_rows.push(json!({"a": ex, "poset": expected_poset, "tor": coeff}));
        computed_rows.push(json!({"a": ex, "poset": poset_rows, "tor": by_weight.get(&a).copied().unwrap_or(0)}));
    }
    Ok(CheckReport::compare(
        "tor_poset_link",
        "Tor_i(M,k) in multidegree a is the reduced homology of the poset below x^a",
        json!({"d": d, "r": r, "i": i, "n": n}),
        json!({"squarefree": [[i as i64 - 1, spec]], "torsion": [], "multidegrees": expected_rows}),
        json!({"squarefree": nonzero(&hz), "torsion": torsion(&hz), "multidegrees": computed_rows}),
    ))
}
