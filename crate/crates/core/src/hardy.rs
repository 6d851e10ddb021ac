//! Dyadic martingale Hardy spaces: maximal functions and p-atoms.

use thiserror::Error;

use crate::norms::lp_norm;
use crate::step::Step2;
use crate::walsh::in_interval;

/// The dyadic maximal function: at each point, the largest modulus among the
/// averages over the dyadic squares `I_n(x) x I_n(y)` containing it.
pub fn dyadic_maximal(f: &Step2<f64>) -> Step2<f64> {
    let level = f.level();
    // averages over rank-n squares, indexed by the low n bits of each coordinate
    let mut pyramids: Vec<Vec<f64>> = Vec::with_capacity(level as usize + 1);
    pyramids.push(f.values().to_vec());
    for n in (0..level).rev() {
        let finer = pyramids.last().unwrap();
        let side = 1u64 << n;
        let finer_side = side << 1;
        let mut avg = vec![0.0; (side * side) as usize];
        for a in 0..side {
            for b in 0..side {
                let mut s = 0.0;
                for (da, db) in [(0, 0), (side, 0), (0, side), (side, side)] {
                    s += finer[(((a + da) * finer_side) + b + db) as usize];
                }
                avg[(a * side + b) as usize] = s / 4.0;
            }
        }
        pyramids.push(avg);
    }
    pyramids.reverse(); // pyramids[n] now holds rank-n averages
    Step2::from_fn(level, |ux, uy| {
        (0..=level)
            .map(|n| {
                let mask = (1u64 << n) - 1;
                pyramids[n as usize][(((ux & mask) << n) | (uy & mask)) as usize].abs()
            })
            .fold(0.0, f64::max)
    })
}

/// `H_p` norm of a rank-`level` step function: the `L_p` norm of its dyadic
/// maximal function.
pub fn hardy_norm(f: &Step2<f64>, p: f64) -> f64 {
    lp_norm(&dyadic_maximal(f), p)
}

#[derive(Debug, Error, PartialEq)]
pub enum AtomViolation {
    #[error("nonzero value outside the supporting cube I_{0} x I_{0}")]
    Support(u32),
    #[error("mean over the supporting cube is {0}, not zero")]
    NonzeroMean(f64),
    #[error("sup norm {got} exceeds the p-atom bound {bound}")]
    SupNorm { got: f64, bound: f64 },
}

/// Checks the three p-atom conditions for a function meant to be supported
/// on the dyadic square `I_j x I_j` around zero: support, vanishing mean,
/// and `||a||_inf <= mu(I_j x I_j)^{-1/p} = 2^{2j/p}`.
pub fn check_p_atom(f: &Step2<f64>, j: u32, p: f64, tol: f64) -> Result<(), AtomViolation> {
    assert!(p > 0.0 && j <= f.level());
    let side = f.side();
    for ux in 0..side {
        for uy in 0..side {
            if !(in_interval(ux, j) && in_interval(uy, j)) && f.value(ux, uy) != 0.0 {
                return Err(AtomViolation::Support(j));
            }
        }
    }
    let mean = f.integral_f64();
    if mean.abs() > tol {
        return Err(AtomViolation::NonzeroMean(mean));
    }
    let bound = ((2 * j) as f64 / p).exp2();
    let sup = f.sup_norm();
    if sup > bound * (1.0 + tol) {
        return Err(AtomViolation::SupNorm { got: sup, bound });
    }
    Ok(())
}

/// The atomic-decomposition bound `(sum |lambda_k|^p)^{1/p}`, an upper
/// estimate of the `H_p` norm up to the equivalence constant.
pub fn atomic_norm_bound(lambdas: &[f64], p: f64) -> f64 {
    assert!(p > 0.0);
    lambdas
        .iter()
        .map(|l| l.abs().powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}
