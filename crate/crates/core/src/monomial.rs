//! Packed monomials and ambient tensor products of symmetric powers.
//!
//! A monomial in at most 8 variables is a `u64` holding one exponent byte per
//! variable, `x₁` in the most significant byte. Adding packed monomials
//! multiplies them, and comparing packed values compares exponent vectors
//! lexicographically.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

pub type Mono = u64;

pub const MAX_VARS: usize = 8;

pub fn var(i: usize) -> Mono {
    1u64 << (8 * (MAX_VARS - 1 - i))
}

pub fn pack(exps: &[u8]) -> Mono {
    exps.iter().enumerate().fold(0, |acc, (i, &e)| acc | ((e as u64) << (8 * (MAX_VARS - 1 - i))))
}

pub fn unpack(m: Mono, n: usize) -> Vec<u8> {
    (0..n).map(|i| exponent(m, i)).collect()
}

pub fn exponent(m: Mono, i: usize) -> u8 {
    (m >> (8 * (MAX_VARS - 1 - i))) as u8
}

pub fn degree(m: Mono) -> usize {
    m.to_be_bytes().iter().map(|&b| b as usize).sum()
}

pub fn divides(a: Mono, b: Mono) -> bool {
    a.to_be_bytes().iter().zip(b.to_be_bytes().iter()).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub fn quotient(b: Mono, a: Mono) -> Mono {
    b - a
}

/// Monomials of one degree, ordered by their sorted variable word
/// (`x₁^k` first), i.e. by decreasing exponent vector.
#[derive(Debug)]
pub struct MonomialBasis {
    pub n: usize,
    pub degree: usize,
    monos: Vec<Mono>,
    index: HashMap<Mono, u32>,
}

impl MonomialBasis {
    fn build(n: usize, degree: usize) -> Self {
        let mut monos = Vec::new();
        fn rec(i: usize, n: usize, left: usize, cur: Mono, out: &mut Vec<Mono>) {
            if i == n - 1 {
                out.push(cur + (left as u64) * var(i));
                return;
            }
            for e in (0..=left).rev() {
                rec(i + 1, n, left - e, cur + (e as u64) * var(i), out);
            }
        }
        rec(0, n, degree, 0, &mut monos);
        let index = monos.iter().enumerate().map(|(k, &m)| (m, k as u32)).collect();
        MonomialBasis { n, degree, monos, index }
    }

    pub fn get(n: usize, degree: usize) -> Result<Arc<MonomialBasis>> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_VARS}")));
        }
        if degree > 255 {
            return Err(Error::Resource(format!("degree {degree} exceeds exponent width")));
        }
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<MonomialBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = cache.lock().unwrap().get(&(n, degree)) {
            return Ok(b.clone());
        }
        let b = Arc::new(MonomialBasis::build(n, degree));
        Ok(cache.lock().unwrap().entry((n, degree)).or_insert(b).clone())
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monos(&self) -> &[Mono] {
        &self.monos
    }

    pub fn position(&self, m: Mono) -> Option<usize> {
        self.index.get(&m).map(|&k| k as usize)
    }
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `dim S^j(kⁿ)`.
pub fn sym_dim(n: usize, j: usize) -> u64 {
    binomial(n + j - 1, j)
}

/// `S^{c₁} ⊗ ⋯ ⊗ S^{c_r}` with factors listed bottom-to-top. A tuple of
/// monomials is indexed in mixed radix with the top factor most significant.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub n: usize,
    rows: Vec<usize>,
    bases: Vec<Arc<MonomialBasis>>,
    strides: Vec<u64>,
    dim: u64,
}

/// Sparse vector in an ambient space, sorted by index.
pub type AmbVec = Vec<(u64, i64)>;

impl Ambient {
    pub fn new(n: usize, rows: &[usize]) -> Result<Self> {
        let bases = rows.iter().map(|&c| MonomialBasis::get(n, c)).collect::<Result<Vec<_>>>()?;
        let mut strides = Vec::with_capacity(rows.len());
        let mut dim: u64 = 1;
        for b in &bases {
            strides.push(dim);
            dim = dim
                .checked_mul(b.len() as u64)
                .ok_or_else(|| Error::Resource("ambient dimension overflow".into()))?;
        }
        Ok(Ambient { n, rows: rows.to_vec(), bases, strides, dim })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn basis(&self, k: usize) -> &MonomialBasis {
        &self.bases[k]
    }

    pub fn encode(&self, monos: &[Mono]) -> u64 {
        monos
            .iter()
            .enumerate()
            .map(|(k, &m)| self.bases[k].position(m).expect("monomial of the row's degree") as u64 * self.strides[k])
            .sum()
    }

    pub fn decode(&self, idx: u64) -> Vec<Mono> {
        self.bases
            .iter()
            .zip(&self.strides)
            .map(|(b, &s)| b.monos[((idx / s) % b.len() as u64) as usize])
            .collect()
    }

    pub fn weight(&self, idx: u64) -> Mono {
        self.decode(idx).into_iter().sum()
    }

    /// Multiplies rows `k` and `k+1` together, landing in `target`.
    pub fn merge_rows(&self, target: &Ambient, k: usize, v: &[(u64, i64)]) -> AmbVec {
        let mut acc: HashMap<u64, i64> = HashMap::with_capacity(v.len());
        for &(idx, c) in v {
            let mut monos = self.decode(idx);
            let merged = monos[k] + monos[k + 1];
            monos.splice(k..k + 2, [merged]);
            *acc.entry(target.encode(&monos)).or_insert(0) += c;
        }
        sorted(acc)
    }
}

pub(crate) fn sorted(acc: HashMap<u64, i64>) -> AmbVec {
    let mut out: AmbVec = acc.into_iter().filter(|e| e.1 != 0).collect();
    out.sort_unstable_by_key(|e| e.0);
    out
}

/// All exponent vectors of total degree `j` in `n` variables, as packed monomials.
pub fn monomials(n: usize, j: usize) -> Result<Vec<Mono>> {
    Ok(MonomialBasis::get(n, j)?.monos().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing() {
        let m = pack(&[2, 0, 1]);
        assert_eq!(unpack(m, 3), vec![2, 0, 1]);
        assert_eq!(degree(m), 3);
        assert_eq!(m, 2 * var(0) + var(2));
        assert!(divides(var(0), m));
        assert!(!divides(var(1), m));
    }

    #[test]
    fn basis_order_and_size() {
        let b = MonomialBasis::get(3, 2).unwrap();
        assert_eq!(b.len(), 6);
        let words: Vec<Vec<u8>> = b.monos().iter().map(|&m| unpack(m, 3)).collect();
        assert_eq!(
            words,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
        for n in 1..=4 {
            for j in 0..=6 {
                assert_eq!(MonomialBasis::get(n, j).unwrap().len() as u64, sym_dim(n, j));
            }
        }
        assert!(MonomialBasis::get(9, 1).is_err());
    }

    #[test]
    fn ambient_round_trip() {
        let a = Ambient::new(2, &[1, 2, 1]).unwrap();
        assert_eq!(a.dim(), 2 * 3 * 2);
        for idx in 0..a.dim() {
            assert_eq!(a.encode(&a.decode(idx)), idx);
        }
        // top row most significant
        assert_eq!(a.encode(&[var(1), 2 * var(0), var(0)]), 1);
        assert_eq!(a.encode(&[var(0), 2 * var(0), var(1)]), 6);
        let t = Ambient::new(2, &[3, 1]).unwrap();
        let v = a.merge_rows(&t, 0, &[(0, 1), (1, -1)]);
        assert_eq!(v.len(), 2);
    }
}
