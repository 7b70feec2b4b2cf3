//! Veronese rings `R = S^(d)`, modules `M = S^(d,r)` and a finite window of
//! the minimal free resolution `⋯ → R ⊗ S^{σ(dⁱ,r)} → ⋯ → R ⊗ S^r → M`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;

use crate::combinatorics::{count_ssyt, Composition, SkewShape};
use crate::error::{Error, Result};
use crate::linalg::CoefficientRing;
use crate::monomial::{self, sym_dim};
use crate::report::{CheckReport, Fault};
use crate::ribbon_complex::{inject_sign_flip, partial_block_cached, PartialBlock};
use crate::schur_module::RealizationCache;
use crate::symfunc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VeroneseModule {
    pub d: usize,
    pub r: usize,
    pub n: usize,
}

impl VeroneseModule {
    pub fn new(d: usize, r: usize, n: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("d must be positive".into()));
        }
        if n == 0 || n > monomial::MAX_VARS {
            return Err(Error::InvalidInput(format!("n = {n} outside 1..={}", monomial::MAX_VARS)));
        }
        Ok(VeroneseModule { d, r, n })
    }

    /// `dim M_j`.
    pub fn component_dim(&self, j: usize) -> u64 {
        if j >= self.r && (j - self.r) % self.d == 0 {
            sym_dim(self.n, j)
        } else {
            0
        }
    }

    /// `dim R_j`.
    pub fn ring_component_dim(&self, j: usize) -> u64 {
        if j % self.d == 0 {
            sym_dim(self.n, j)
        } else {
            0
        }
    }

    /// `(p, valid)` with `p = j − di − r` the R-degree of step `i` in degree `j`.
    pub fn r_degree(&self, i: usize, j: usize) -> Option<usize> {
        let g = self.d * i + self.r;
        (j >= g && (j - g) % self.d == 0).then(|| j - g)
    }
}

#[derive(Debug, Clone)]
pub struct ResolutionStep {
    pub i: usize,
    pub shape: Composition,
    pub generator_degree: usize,
    pub generators: usize,
}

/// Blocks `(∂_i)_j` for `i ≤ i_max`, `j ≤ deg_max`; `∂₀` is the
/// multiplication `R ⊗ S^r → M`.
#[derive(Debug)]
pub struct ResolutionWindow {
    pub module: VeroneseModule,
    pub ring: CoefficientRing,
    pub i_max: usize,
    pub deg_max: usize,
    pub steps: Vec<ResolutionStep>,
    /// keyed by `(i, j)`, source degree `j`
    pub blocks: BTreeMap<(usize, usize), PartialBlock>,
}

pub fn build_resolution(
    d: usize,
    r: usize,
    n: usize,
    ring: CoefficientRing,
    i_max: usize,
    deg_max: usize,
) -> Result<ResolutionWindow> {
    build_resolution_cached(&RealizationCache::new(n, ring), d, r, i_max, deg_max)
}

pub fn build_resolution_cached(
    cache: &RealizationCache,
    d: usize,
    r: usize,
    i_max: usize,
    deg_max: usize,
) -> Result<ResolutionWindow> {
    if r == 0 {
        return Err(Error::Degenerate(
            "r = 0: M = R is free, resolved by R itself in a single step".into(),
        ));
    }
    let module = VeroneseModule::new(d, r, cache.n)?;
    let steps = (0..=i_max)
        .map(|i| {
            let shape = Composition::power_then(d, i, r)?;
            let generators = cache.ribbon(&shape)?.tableaux().len();
            Ok(ResolutionStep { i, generator_degree: d * i + r, shape, generators })
        })
        .collect::<Result<Vec<_>>>()?;
    let keys: Vec<(usize, usize, usize)> = (0..=i_max)
        .flat_map(|i| (0..=deg_max).filter_map(move |j| module.r_degree(i, j).map(|p| (i, j, p))))
        .collect();
    let blocks = keys
        .par_iter()
        .map(|&(i, j, p)| Ok(((i, j), partial_block_cached(cache, &steps[i].shape, p)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(ResolutionWindow { module, ring: cache.ring, i_max, deg_max, steps, blocks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactnessRow {
    pub i: usize,
    pub j: usize,
    pub kernel: usize,
    pub image: usize,
    pub contained: bool,
}

impl ResolutionWindow {
    /// `dim (F_i)_j`.
    pub fn term_dim(&self, i: usize, j: usize) -> usize {
        self.blocks.get(&(i, j)).map_or(0, |b| b.matrix.ncols())
    }

    /// Flips one sign in the lowest nonzero `∂₂` block so that `∂₁∂₂ ≠ 0`.
    pub fn inject_fault(&mut self, fault: Fault) {
        let Fault::SignFlip = fault;
        let keys: Vec<(usize, usize)> = self.blocks.keys().filter(|k| k.0 == 2).copied().collect();
        for (i, j) in keys {
            let Some(next) = self.blocks.get(&(1, j)) else { continue };
            let flipped = inject_sign_flip(&self.blocks[&(i, j)].matrix, &next.matrix, self.ring);
            if flipped != self.blocks[&(i, j)].matrix {
                self.blocks.get_mut(&(i, j)).expect("present").matrix = flipped;
                return;
            }
        }
    }

    fn rank(&self, i: usize, j: usize) -> Result<usize> {
        self.blocks.get(&(i, j)).map_or(Ok(0), |b| b.rank())
    }

    /// `ker(∂_i)_j` against `im(∂_{i+1})_j` for `i < i_max`, all `j`.
    pub fn exactness_rows(&self) -> Result<Vec<ExactnessRow>> {
        let keys: Vec<(usize, usize)> = self.blocks.keys().filter(|k| k.0 < self.i_max).copied().collect();
        keys.par_iter()
            .map(|&(i, j)| {
                let kernel = self.term_dim(i, j) - self.rank(i, j)?;
                let image = self.rank(i + 1, j)?;
                let contained = match self.blocks.get(&(i + 1, j)) {
                    Some(up) => self.blocks[&(i, j)].matrix.mul(&up.matrix)?.is_zero_in(self.ring),
                    None => true,
                };
                Ok(ExactnessRow { i, j, kernel, image, contained })
            })
            .collect()
    }

    /// `rank (∂₀)_j` for every `j` with `M_j ≠ 0`.
    pub fn augmentation_ranks(&self) -> Result<Vec<(usize, usize)>> {
        (0..=self.deg_max)
            .filter(|&j| self.module.component_dim(j) > 0)
            .map(|j| Ok((j, self.rank(0, j)?)))
            .collect()
    }

    /// Nonzero entries of `∂_i ⊗_R k` for `i ≥ 1`: entries landing on
    /// generators of the previous step, i.e. in R-degree 0.
    pub fn reduced_entries(&self) -> usize {
        self.blocks
            .iter()
            .filter(|(&(i, _), b)| i >= 1 && b.p + b.alpha.first() == 0)
            .map(|(_, b)| b.matrix.nnz())
            .sum()
    }

    /// `Tor_i^R(M,k)_j` as homology of `F ⊗_R k`; with `∂ ⊗ k = 0` this is
    /// the generator count of each step.
    pub fn tor_with_residue_field(&self) -> Vec<(usize, usize, usize)> {
        if self.reduced_entries() != 0 {
            return Vec::new();
        }
        self.blocks
            .iter()
            .filter(|(_, b)| b.p == 0 && b.matrix.ncols() > 0)
            .map(|(&(i, j), b)| (i, j, b.matrix.ncols()))
            .collect()
    }
}

pub fn verify_exactness(w: &ResolutionWindow) -> Result<CheckReport> {
    let rows = w.exactness_rows()?;
    let aug = w.augmentation_ranks()?;
    let m = w.module;
    let expected_rows: Vec<_> = rows.iter().map(|r| json!([r.i, r.j, r.image, true])).collect();
    let computed_rows: Vec<_> = rows.iter().map(|r| json!([r.i, r.j, r.kernel, r.contained])).collect();
    let expected_aug: Vec<_> = aug.iter().map(|&(j, _)| json!([j, m.component_dim(j)])).collect();
    let computed_aug: Vec<_> = aug.iter().map(|&(j, k)| json!([j, k])).collect();
    let failures: Vec<String> = rows
        .iter()
        .filter(|r| r.kernel != r.image || !r.contained)
        .map(|r| format!("(i, j) = ({}, {})", r.i, r.j))
        .collect();
    let report = CheckReport::compare(
        "resolution_exact",
        "ker(∂_i) = im(∂_{i+1}) in every internal degree, and ∂₀ maps onto M",
        params(w),
        json!({"rows": expected_rows, "augmentation": expected_aug}),
        json!({"rows": computed_rows, "augmentation": computed_aug}),
    );
    Ok(if failures.is_empty() { report } else { report.with_detail(failures.join(", ")) })
}

pub fn verify_minimality(w: &ResolutionWindow) -> Result<CheckReport> {
    Ok(CheckReport::compare(
        "resolution_minimal",
        "the differentials have all entries in R₊",
        params(w),
        json!({"reduced_nonzero_entries": 0}),
        json!({"reduced_nonzero_entries": w.reduced_entries()}),
    ))
}

fn params(w: &ResolutionWindow) -> serde_json::Value {
    json!({
        "d": w.module.d,
        "r": w.module.r,
        "n": w.module.n,
        "ring": w.ring.to_string(),
        "i_max": w.i_max,
        "deg_max": w.deg_max,
    })
}

/// `(di+r, #SSYT(σ(dⁱ,r), n))`.
pub fn betti(d: usize, r: usize, n: usize, i: usize) -> Result<(usize, usize)> {
    if d == 0 || r == 0 {
        return Err(Error::InvalidInput("d and r must be positive".into()));
    }
    let shape = Composition::power_then(d, i, r)?;
    Ok((d * i + r, count_ssyt(&SkewShape::ribbon(&shape), n)))
}

/// Tor concentration of the window against the SSYT count and the
/// Jacobi–Trudi dimension.
pub fn verify_betti(w: &ResolutionWindow) -> Result<CheckReport> {
    let (d, r, n) = (w.module.d, w.module.r, w.module.n);
    let mut expected = Vec::new();
    for i in 0..=w.i_max {
        let (deg, dim) = betti(d, r, n, i)?;
        if deg <= w.deg_max && dim > 0 {
            expected.push(json!([i, deg, dim]));
        }
    }
    let computed: Vec<_> = w.tor_with_residue_field().into_iter().map(|(i, j, k)| json!([i, j, k])).collect();
    let jt: Vec<i64> = (0..=w.i_max)
        .map(|i| {
            let shape = SkewShape::ribbon(&Composition::power_then(d, i, r)?);
            Ok(symfunc::jacobi_trudi(&shape, n, symfunc::DEFAULT_MAX_DEG.max(shape.num_cells()))?.eval_ones())
        })
        .collect::<Result<Vec<_>>>()?;
    let ssyt: Vec<i64> = (0..=w.i_max).map(|i| Ok(betti(d, r, n, i)?.1 as i64)).collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::compare(
        "betti",
        "Tor_i(M,k) is concentrated in degree di+r with dimension #SSYT(σ(dⁱ,r))",
        params(w),
        json!({"tor": expected, "jacobi_trudi": jt}),
        json!({"tor": computed, "jacobi_trudi": ssyt}),
    ))
}

/// `dim M_j = Σ (−1)^i dim (F_i)_j` for degrees fully inside the window.
pub fn verify_euler(w: &ResolutionWindow) -> Result<CheckReport> {
    let m = w.module;
    let max_full = (w.deg_max).min(m.r + m.d * w.i_max);
    let degrees: Vec<usize> = (0..=max_full).filter(|&j| m.component_dim(j) > 0).collect();
    let expected: Vec<u64> = degrees.iter().map(|&j| m.component_dim(j)).collect();
    let computed: Vec<i64> = degrees
        .iter()
        .map(|&j| {
            (0..=w.i_max)
                .map(|i| if i % 2 == 0 { w.term_dim(i, j) as i64 } else { -(w.term_dim(i, j) as i64) })
                .sum()
        })
        .collect();
    Ok(CheckReport::compare(
        "resolution_euler",
        "alternating sum of the resolvents recovers the Hilbert function of M",
        params(w),
        json!(expected),
        json!(computed),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::binomial;

    const Q: CoefficientRing = CoefficientRing::Rationals;

    #[test]
    fn module_dims() {
        let m = VeroneseModule::new(3, 2, 2).unwrap();
        assert_eq!((0..12).map(|j| m.component_dim(j)).collect::<Vec<_>>(), vec![0, 0, 3, 0, 0, 6, 0, 0, 9, 0, 0, 12]);
        assert_eq!(m.ring_component_dim(6), binomial(7, 6));
    }

    #[test]
    fn shapes_for_d3_r4() {
        let w = build_resolution(3, 4, 2, Q, 2, 10).unwrap();
        let shapes: Vec<String> = w.steps.iter().map(|s| s.shape.to_string()).collect();
        assert_eq!(shapes, vec!["(4)", "(3,4)", "(3,3,4)"]);
        assert_eq!(w.steps.iter().map(|s| s.generator_degree).collect::<Vec<_>>(), vec![4, 7, 10]);
    }

    #[test]
    fn r_zero_is_degenerate() {
        assert!(matches!(build_resolution(2, 0, 2, Q, 2, 6), Err(Error::Degenerate(_))));
    }

    #[test]
    fn koszul_case() {
        // d = r = 1: step i is ∧^{i+1}
        let w = build_resolution(1, 1, 3, Q, 2, 5).unwrap();
        let gens: Vec<usize> = w.steps.iter().map(|s| s.generators).collect();
        assert_eq!(gens, vec![3, 3, 1]);
        assert!(verify_exactness(&w).unwrap().passed());
        assert!(verify_minimality(&w).unwrap().passed());
    }

    #[test]
    fn d2_r1_window() {
        for ring in [Q, CoefficientRing::PrimeField(2), CoefficientRing::PrimeField(3)] {
            let w = build_resolution(2, 1, 2, ring, 3, 9).unwrap();
            let e = verify_exactness(&w).unwrap();
            assert!(e.passed(), "{e:?}");
            assert!(verify_minimality(&w).unwrap().passed());
            assert!(verify_betti(&w).unwrap().passed());
            assert!(verify_euler(&w).unwrap().passed());
        }
    }

    #[test]
    fn d3_r2_window() {
        let w = build_resolution(3, 2, 2, Q, 3, 14).unwrap();
        assert!(verify_exactness(&w).unwrap().passed());
        // the slice j = di + r has no kernel beyond the image
        for row in w.exactness_rows().unwrap() {
            if row.j == 3 * row.i + 2 && row.i > 0 {
                assert_eq!(row.kernel, 0);
            }
        }
    }

    #[test]
    fn fault_breaks_exactness() {
        let mut w = build_resolution(2, 1, 2, Q, 3, 9).unwrap();
        w.inject_fault(Fault::SignFlip);
        assert!(!verify_exactness(&w).unwrap().passed());
    }

    #[test]
    fn betti_values() {
        assert_eq!(betti(2, 1, 2, 2).unwrap(), (5, 2));
        assert_eq!(betti(3, 4, 3, 0).unwrap(), (4, sym_dim(3, 4) as usize));
        // r = d: Tor_{i−1}(R₊,k) sits in degree di with σ(dⁱ)
        let expected: Vec<(usize, usize)> = vec![(2, 3), (4, 4), (6, 4)];
        assert_eq!((1..4).map(|i| betti(2, 2, 2, i - 1).unwrap()).collect::<Vec<_>>(), expected);
    }
}
