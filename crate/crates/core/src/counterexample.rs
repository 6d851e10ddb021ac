//! The extremal martingale witnessing sharpness of the strong summability
//! weights for two-dimensional Walsh-Fourier partial sums.
//!
//! For `0 < p < 1`, an aspect bound `alpha > 0` and a growth function `Phi`
//! tending to infinity, the construction picks a lacunary sequence of block
//! exponents and stacks scaled products of Dirichlet block kernels into a
//! martingale of `H_p` norm controlled by `(sum lambda_k^p)^{1/p}`. Along
//! odd rectangular indices inside a block, the partial sums have an exactly
//! known modulus on the quarter of the square where both coordinates leave
//! `I_1`, which drives the `Phi`-weighted strong means to infinity.

use std::collections::HashMap;
use std::str::FromStr;

use thiserror::Error;

use crate::hardy::atomic_norm_bound;
use crate::kernel::{dirichlet, dirichlet_block, dirichlet_dyadic};
use crate::norms::weak_lp_from_histogram;
use crate::step::{Step1, Step2};

/// A nondecreasing weight `Phi(m, n) >= 1` with `Phi -> infinity`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Growth {
    /// `(1 + log2(1 + min(m, n)))^q`
    LogPow { q: f64 },
    /// `(1 + min(m, n))^beta`
    Pow { beta: f64 },
}

impl Growth {
    pub fn value(&self, m: u64, n: u64) -> f64 {
        let t = m.min(n) as f64;
        match *self {
            Growth::LogPow { q } => (1.0 + (1.0 + t).log2()).powf(q),
            Growth::Pow { beta } => (1.0 + t).powf(beta),
        }
    }
}

impl FromStr for Growth {
    type Err = String;

    /// Accepts `log:<q>` and `pow:<beta>` with a positive parameter.
    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, param) = s
            .split_once(':')
            .ok_or_else(|| format!("expected `log:<q>` or `pow:<beta>`, got `{s}`"))?;
        let x: f64 = param
            .parse()
            .map_err(|_| format!("bad growth parameter `{param}`"))?;
        if !(x > 0.0) {
            return Err(format!("growth parameter must be positive, got {x}"));
        }
        match kind {
            "log" => Ok(Growth::LogPow { q: x }),
            "pow" => Ok(Growth::Pow { beta: x }),
            other => Err(format!("unknown growth kind `{other}`")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("p must lie in (0, 1), got {0}")]
    InvalidP(f64),
    #[error("alpha must be positive, got {0}")]
    InvalidAlpha(f64),
    #[error("need at least one block")]
    NoBlocks,
    #[error("block {k} requires resolution level {needed}, above the cap {cap}")]
    LevelCap { k: usize, needed: u32, cap: u32 },
}

/// The counterexample martingale, determined by `p`, `alpha`, the growth
/// weight and the chosen block exponents.
#[derive(Clone, Debug)]
pub struct Counterexample {
    p: f64,
    alpha: f64,
    growth: Growth,
    blocks: Vec<u32>,
}

impl Counterexample {
    /// Picks `num_blocks` block exponents `alpha_k`: the smallest admissible
    /// sequence with `alpha_0 >= 2`, gaps larger than `[alpha] + 1`, and
    /// `Phi(2^{alpha_k}, 2^{alpha_k})^{-p/4} <= 2^-k`, which makes the
    /// coefficient series p-power summable by comparison with a geometric
    /// series.
    pub fn new(
        p: f64,
        alpha: f64,
        growth: Growth,
        num_blocks: usize,
        max_level: u32,
    ) -> Result<Self, ConstructionError> {
        if !(p > 0.0 && p < 1.0) {
            return Err(ConstructionError::InvalidP(p));
        }
        if !(alpha > 0.0) {
            return Err(ConstructionError::InvalidAlpha(alpha));
        }
        if num_blocks == 0 {
            return Err(ConstructionError::NoBlocks);
        }
        let gap = alpha.floor() as u32 + 1;
        let mut blocks = Vec::with_capacity(num_blocks);
        let mut j = 2u32;
        for k in 0..num_blocks {
            let target = (-(k as f64)).exp2();
            while growth.value(1 << j, 1 << j).powf(-p / 4.0) > target {
                j += 1;
            }
            let needed = j + gap;
            if needed > max_level {
                return Err(ConstructionError::LevelCap { k, needed, cap: max_level });
            }
            blocks.push(j);
            j += gap + 1;
        }
        Ok(Counterexample {
            p,
            alpha,
            growth,
            blocks,
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn growth(&self) -> Growth {
        self.growth
    }

    /// Integer part of `alpha`.
    pub fn alpha_floor(&self) -> u32 {
        self.alpha.floor() as u32
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block exponent `alpha_k`.
    pub fn block_exponent(&self, k: usize) -> u32 {
        self.blocks[k]
    }

    /// The exponent just past the top of block `k`: coefficients of block
    /// `k` occupy indices in `[2^{alpha_k}, 2^{alpha_k + [alpha] + 1})`.
    pub fn block_top(&self, k: usize) -> u32 {
        self.blocks[k] + self.alpha_floor() + 1
    }

    /// `Phi(2^{alpha_k}, 2^{alpha_k})`.
    pub fn phi_block(&self, k: usize) -> f64 {
        let s = 1u64 << self.blocks[k];
        self.growth.value(s, s)
    }

    /// The atomic coefficient `lambda_k = 2^{2[alpha]+2} Phi^{-1/4}`.
    pub fn lambda(&self, k: usize) -> f64 {
        ((2 * self.alpha_floor() + 2) as f64).exp2() * self.phi_block(k).powf(-0.25)
    }

    /// The scale putting the product of block kernels inside the p-atom
    /// sup-norm bound: `2^{alpha_k (2/p - 2) - 2[alpha] - 2}`.
    pub fn atom_scale(&self, k: usize) -> f64 {
        let e = self.blocks[k] as f64 * (2.0 / self.p - 2.0) - (2 * self.alpha_floor() + 2) as f64;
        e.exp2()
    }

    /// The constant Walsh-Fourier coefficient on block `k`:
    /// `2^{alpha_k (2/p - 2)} Phi^{-1/4}`.
    pub fn block_coefficient(&self, k: usize) -> f64 {
        (self.blocks[k] as f64 * (2.0 / self.p - 2.0)).exp2() * self.phi_block(k).powf(-0.25)
    }

    /// The p-atom `a_k`, sampled at the given resolution level
    /// (at least `block_top(k)`).
    pub fn atom(&self, k: usize, level: u32) -> Step2<f64> {
        assert!(level >= self.block_top(k), "level too coarse for block {k}");
        let b = dirichlet_block(self.blocks[k], self.block_top(k), level).map(|v| v as f64);
        let scale = self.atom_scale(k);
        Step2::separable(&b, &b).map(|v| v * scale)
    }

    /// The Walsh-Fourier coefficient of the martingale at `(i, j)`.
    pub fn coefficient(&self, i: u64, j: u64) -> f64 {
        for k in 0..self.blocks.len() {
            let lo = 1u64 << self.blocks[k];
            let hi = 1u64 << self.block_top(k);
            if (lo..hi).contains(&i) && (lo..hi).contains(&j) {
                return self.block_coefficient(k);
            }
        }
        0.0
    }

    /// The martingale member `f_n`, i.e. the sum of the fully resolved
    /// atomic terms, materialized at the given resolution.
    pub fn martingale_level(&self, n: u32, level: u32) -> Step2<f64> {
        let mut f = Step2::constant(level, 0.0);
        for k in 0..self.blocks.len() {
            if self.block_top(k) <= n {
                let lambda = self.lambda(k);
                let a = self.atom(k, level);
                f = f.zip(&a, |acc, v| acc + lambda * v);
            }
        }
        f
    }

    /// Coefficients `lambda_k` for the blocks built so far.
    pub fn lambdas(&self) -> Vec<f64> {
        (0..self.blocks.len()).map(|k| self.lambda(k)).collect()
    }

    /// `(sum lambda_k^p)^{1/p}`, the atomic upper estimate for the `H_p`
    /// norm of the truncated martingale.
    pub fn hardy_bound(&self) -> f64 {
        atomic_norm_bound(&self.lambdas(), self.p)
    }

    /// `S_{m,n} f` as a sum of separable products: for every block that the
    /// rectangle `[0,m) x [0,n)` meets, a product of Dirichlet kernel
    /// differences weighted by the block coefficient. Exact in the kernel
    /// structure; only the scalar weight is floating point.
    pub fn partial_sum_terms(&self, m: u64, n: u64, level: u32) -> Vec<(Step1<f64>, Step1<f64>)> {
        let mut terms = Vec::new();
        for k in 0..self.blocks.len() {
            let lo_exp = self.blocks[k];
            let lo = 1u64 << lo_exp;
            let hi = 1u64 << self.block_top(k);
            if m <= lo || n <= lo {
                continue;
            }
            let m_eff = m.min(hi);
            let n_eff = n.min(hi);
            let c = self.block_coefficient(k);
            let low = dirichlet_dyadic(lo_exp, level);
            let fx = dirichlet(m_eff, level)
                .zip(&low, |a, b| (a - b) as f64 * c);
            let fy = dirichlet(n_eff, level).zip(&low, |a, b| (a - b) as f64);
            terms.push((fx, fy));
        }
        terms
    }

    /// Materializes `S_{m,n} f` on a grid. Intended for small levels; the
    /// weak-norm path below never builds the grid.
    pub fn partial_sum_grid(&self, m: u64, n: u64, level: u32) -> Step2<f64> {
        let terms = self.partial_sum_terms(m, n, level);
        let mut g = Step2::constant(level, 0.0);
        for (fx, fy) in &terms {
            let prod = Step2::separable(fx, fy);
            g = g.zip(&prod, |a, b| a + b);
        }
        g
    }

    /// Exact weak-`L_p` quasi-norm of `S_{m,n} f`, computed from the
    /// separable representation: cells are grouped into classes by their
    /// factor-value tuples, and the value histogram is assembled over class
    /// pairs instead of the full two-dimensional grid.
    pub fn weak_lp_partial_sum(&self, m: u64, n: u64, level: u32) -> f64 {
        let terms = self.partial_sum_terms(m, n, level);
        if terms.is_empty() {
            return 0.0;
        }
        let xs: Vec<&Step1<f64>> = terms.iter().map(|(fx, _)| fx).collect();
        let ys: Vec<&Step1<f64>> = terms.iter().map(|(_, fy)| fy).collect();
        let x_classes = factor_classes(&xs);
        let y_classes = factor_classes(&ys);
        let mut hist = Vec::with_capacity(x_classes.len() * y_classes.len());
        for (vx, mx) in &x_classes {
            for (vy, my) in &y_classes {
                let v: f64 = vx.iter().zip(vy).map(|(a, b)| a * b).sum();
                hist.push((v.abs(), mx * my));
            }
        }
        weak_lp_from_histogram(&mut hist, self.p)
    }

    /// The modulus that `S_{m,n} f` takes on `(G \ I_1) x (G \ I_1)` for
    /// odd `m, n` strictly inside block `k`.
    pub fn tail_value(&self, k: usize) -> f64 {
        self.block_coefficient(k)
    }

    /// Odd rectangular indices of the band used in the divergence estimate:
    /// odd `m` with `2^{alpha_k} < m <= 2^{alpha_k + alpha}`. Any pair from
    /// the band automatically satisfies the aspect bound
    /// `2^-alpha <= m/n <= 2^alpha`.
    pub fn band_odd_indices(&self, k: usize) -> Vec<u64> {
        let lo = 1u64 << self.blocks[k];
        let hi = ((self.blocks[k] as f64 + self.alpha).exp2()).floor() as u64;
        let mut m = lo + 1;
        let mut out = Vec::new();
        while m <= hi {
            out.push(m);
            m += 2;
        }
        out
    }

    /// Lower bound for the `Phi`-weighted strong mean over band `k`:
    /// every pair of odd indices in the band contributes at least
    /// `(tail_value^p / 4) * Phi(m, n) / (mn)^{2-p}`, since the partial sum
    /// reaches `tail_value` on a set of measure at least `1/4`.
    pub fn band_sum_lower_bound(&self, k: usize) -> f64 {
        let odd = self.band_odd_indices(k);
        if odd.is_empty() {
            return 0.0;
        }
        let weights: Vec<f64> = odd
            .iter()
            .map(|&m| (m as f64).powf(self.p - 2.0))
            .collect();
        // sum over pairs of Phi(min) * w_i * w_j, grouped by which index is
        // the smaller one: suffix sums make this linear in the band size
        let mut suffix = vec![0.0; weights.len() + 1];
        for i in (0..weights.len()).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }
        let mut pair_sum = 0.0;
        for (i, (&m, &w)) in odd.iter().zip(&weights).enumerate() {
            let phi = self.growth.value(m, m);
            pair_sum += phi * w * (2.0 * suffix[i] - w);
        }
        let value_p = self.tail_value(k).powf(self.p);
        value_p / 4.0 * pair_sum
    }

    /// The divergence certificate `Phi^{3/4}(2^{alpha_k}, 2^{alpha_k})` that
    /// the band sums must eventually dominate up to a constant.
    pub fn certificate(&self, k: usize) -> f64 {
        self.phi_block(k).powf(0.75)
    }
}

/// Groups cells by the tuple of factor values; returns one representative
/// value vector per class together with the class measure.
fn factor_classes(factors: &[&Step1<f64>]) -> Vec<(Vec<f64>, f64)> {
    let level = factors[0].level();
    let cells = 1u64 << level;
    let cell_measure = 1.0 / cells as f64;
    let mut classes: HashMap<Vec<u64>, (Vec<f64>, f64)> = HashMap::new();
    for u in 0..cells {
        let vals: Vec<f64> = factors.iter().map(|f| f.value(u)).collect();
        let key: Vec<u64> = vals.iter().map(|v| v.to_bits()).collect();
        let entry = classes.entry(key).or_insert_with(|| (vals, 0.0));
        entry.1 += cell_measure;
    }
    classes.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::weak_lp_norm;
    use crate::walsh::in_interval;

    fn small() -> Counterexample {
        Counterexample::new(0.5, 1.0, Growth::LogPow { q: 8.0 }, 3, 24).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            Counterexample::new(1.0, 1.0, Growth::Pow { beta: 1.0 }, 2, 20),
            Err(ConstructionError::InvalidP(_))
        ));
        assert!(matches!(
            Counterexample::new(0.5, 0.0, Growth::Pow { beta: 1.0 }, 2, 20),
            Err(ConstructionError::InvalidAlpha(_))
        ));
        assert!(matches!(
            Counterexample::new(0.5, 1.0, Growth::LogPow { q: 2.0 }, 50, 12),
            Err(ConstructionError::LevelCap { .. })
        ));
    }

    #[test]
    fn growth_parsing() {
        assert_eq!("log:2".parse::<Growth>().unwrap(), Growth::LogPow { q: 2.0 });
        assert_eq!("pow:0.5".parse::<Growth>().unwrap(), Growth::Pow { beta: 0.5 });
        assert!("lin:1".parse::<Growth>().is_err());
        assert!("log:-1".parse::<Growth>().is_err());
    }

    #[test]
    fn blocks_are_admissible() {
        let ce = small();
        let gap = ce.alpha_floor() + 1;
        assert!(ce.block_exponent(0) >= 2);
        for k in 1..ce.num_blocks() {
            assert!(ce.block_exponent(k) > ce.block_exponent(k - 1) + gap);
        }
        for k in 0..ce.num_blocks() {
            let term = ce.phi_block(k).powf(-ce.p() / 4.0);
            assert!(term <= (-(k as f64)).exp2() + 1e-15);
        }
    }

    #[test]
    fn coefficient_blocks_match_lambda_times_atom() {
        let ce = small();
        for k in 0..2 {
            let want = ce.lambda(k) * ce.atom_scale(k);
            assert!((want - ce.block_coefficient(k)).abs() / want < 1e-12);
        }
        // off-block indices vanish
        assert_eq!(ce.coefficient(0, 0), 0.0);
        assert_eq!(ce.coefficient(1, 1), 0.0);
        let lo = 1u64 << ce.block_exponent(0);
        assert_eq!(ce.coefficient(lo, 0), 0.0);
        assert!(ce.coefficient(lo, lo) > 0.0);
    }

    #[test]
    fn separable_weak_norm_matches_grid_weak_norm() {
        let ce = small();
        let level = ce.block_top(0) + 1;
        let lo = 1u64 << ce.block_exponent(0);
        for (m, n) in [(lo + 1, lo + 3), (lo + 3, lo + 1), (2 * lo - 1, 2 * lo - 1)] {
            let grid = ce.partial_sum_grid(m, n, level);
            let direct = weak_lp_norm(&grid, ce.p());
            let fast = ce.weak_lp_partial_sum(m, n, level);
            assert!((direct - fast).abs() <= 1e-10 * direct.max(1.0), "m={m} n={n}");
        }
    }

    #[test]
    fn tail_value_attained_off_i1() {
        let ce = small();
        let k = 1;
        let level = ce.block_top(k);
        let lo = 1u64 << ce.block_exponent(k);
        let (m, n) = (lo + 1, lo + 3);
        let grid = ce.partial_sum_grid(m, n, level);
        let want = ce.tail_value(k);
        for ux in 0..grid.side() {
            for uy in 0..grid.side() {
                if !in_interval(ux, 1) && !in_interval(uy, 1) {
                    let got = grid.value(ux, uy).abs();
                    assert!((got - want).abs() / want < 1e-12);
                }
            }
        }
    }

    #[test]
    fn band_indices_are_odd_and_in_range() {
        let ce = small();
        let lo = 1u64 << ce.block_exponent(0);
        let odd = ce.band_odd_indices(0);
        assert!(!odd.is_empty());
        for m in odd {
            assert!(m % 2 == 1 && m > lo && m <= 2 * lo);
        }
    }

    #[test]
    fn band_sum_matches_naive_pair_loop() {
        let ce = small();
        let k = 0;
        let odd = ce.band_odd_indices(k);
        let vp = ce.tail_value(k).powf(ce.p());
        let mut naive = 0.0;
        for &m in &odd {
            for &n in &odd {
                naive += vp / 4.0 * ce.growth().value(m, n)
                    / ((m * n) as f64).powf(2.0 - ce.p());
            }
        }
        let fast = ce.band_sum_lower_bound(k);
        assert!((naive - fast).abs() / naive < 1e-12);
    }
}
