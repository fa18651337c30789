//! Brute-force cohomology over ℚ, sharing no linear algebra with the library.
//!
//! Works on `gl_n` in the `E_ij` basis. `γ`, `h⁰` and `h²` are dimensions of
//! solution spaces of commutation equations; `h²` uses the trace-form dual of the
//! cokernel of `d¹`: `{Y ∈ 𝔤^I : ΦY = qYΦ, NY = YN}`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use wdwalk::wd::WDTriple;
use wdwalk::Matrix;

pub type Q = BigRational;
pub type Dense = Vec<Vec<Q>>;

pub fn to_dense(m: &Matrix) -> Dense {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_rational().expect("oracle needs rational entries")).collect())
        .collect()
}

pub fn rank(mut rows: Dense) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let v = &f * &rows[rank][j];
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rows of the map `X ↦ PX − sXQ` on vectorized `n × n` matrices.
fn sylvester(p: &Dense, s: &Q, q: &Dense) -> Dense {
    let n = p.len();
    let idx = |i: usize, j: usize| i * n + j;
    let mut out = vec![vec![Q::zero(); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            let row = &mut out[idx(i, j)];
            for k in 0..n {
                row[idx(k, j)] += p[i][k].clone();
                row[idx(i, k)] -= s * &q[k][j];
            }
        }
    }
    out
}

fn solution_dim(n: usize, blocks: Vec<Dense>) -> usize {
    let rows: Dense = blocks.into_iter().flatten().collect();
    n * n - rank(rows)
}

/// `(γ, h⁰, h¹, h²)` with `h¹` from the Euler characteristic.
pub fn oracle_cohomology(d: &WDTriple) -> (usize, usize, usize, usize) {
    let n = d.n();
    let one = Q::one();
    let q = d.q.to_rational().expect("rational q");
    let phi = to_dense(&d.phi);
    let nil = to_dense(&d.nilpotent);
    let taus: Vec<Dense> = d.inertial.matrices().iter().map(to_dense).collect();
    let tau_eqs = || taus.iter().map(|t| sylvester(t, &one, t)).collect::<Vec<_>>();
    let gamma = solution_dim(n, tau_eqs());
    let mut b0 = tau_eqs();
    b0.push(sylvester(&phi, &one, &phi));
    b0.push(sylvester(&nil, &one, &nil));
    let h0 = solution_dim(n, b0);
    let mut b2 = tau_eqs();
    b2.push(sylvester(&phi, &q, &phi));
    b2.push(sylvester(&nil, &one, &nil));
    let h2 = solution_dim(n, b2);
    (gamma, h0, h0 + h2, h2)
}
