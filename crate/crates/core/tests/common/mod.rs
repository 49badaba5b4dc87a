//! Brute-force oracles shared by the integration and acceptance suites.
//!
//! Nothing here calls into the solver or the thermal model; the oracles
//! re-derive everything from the raw problem data.
#![allow(dead_code)]

use alm_core::{LinearProgram, Relation};
use rand::Rng;

/// Minimum objective over all feasible vertices of a bounded LP, or `None`
/// when no vertex is feasible.
pub fn vertex_enumeration(lp: &LinearProgram) -> Option<f64> {
    let n = lp.num_vars();
    // Hyperplanes a·x = b; equality rows are mandatory members of every basis.
    let mut mandatory = Vec::new();
    let mut optional = Vec::new();
    for c in lp.constraints() {
        let plane = (c.coefficients.clone(), c.rhs);
        if c.relation == Relation::Equal {
            mandatory.push(plane);
        } else {
            optional.push(plane);
        }
    }
    for (j, b) in lp.bounds().iter().enumerate() {
        for v in [b.lower, b.upper] {
            if v.is_finite() {
                let mut a = vec![0.0; n];
                a[j] = 1.0;
                optional.push((a, v));
            }
        }
    }
    assert!(
        mandatory.len() <= n,
        "oracle expects at most n equality rows"
    );
    let pick = n - mandatory.len();
    let mut best: Option<f64> = None;
    for subset in combinations(optional.len(), pick) {
        let mut a: Vec<Vec<f64>> = mandatory.iter().map(|p| p.0.clone()).collect();
        let mut b: Vec<f64> = mandatory.iter().map(|p| p.1).collect();
        for &i in &subset {
            a.push(optional[i].0.clone());
            b.push(optional[i].1);
        }
        let Some(x) = gauss_solve(a, b) else { continue };
        if is_feasible(lp, &x, 1e-9) {
            let obj: f64 = lp.objective().iter().zip(&x).map(|(c, v)| c * v).sum();
            best = Some(best.map_or(obj, |b: f64| b.min(obj)));
        }
    }
    best
}

pub fn is_feasible(lp: &LinearProgram, x: &[f64], tol: f64) -> bool {
    for c in lp.constraints() {
        let lhs: f64 = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
        let scale = 1.0 + c.coefficients.iter().map(|a| a.abs()).fold(0.0, f64::max) + c.rhs.abs();
        let ok = match c.relation {
            Relation::LessEq => lhs <= c.rhs + tol * scale,
            Relation::GreaterEq => lhs >= c.rhs - tol * scale,
            Relation::Equal => (lhs - c.rhs).abs() <= tol * scale,
        };
        if !ok {
            return false;
        }
    }
    lp.bounds().iter().zip(x).all(|(b, &v)| {
        v >= b.lower - tol * (1.0 + b.lower.abs()) && v <= b.upper + tol * (1.0 + b.upper.abs())
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Gaussian elimination with partial pivoting; `None` if singular.
fn gauss_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-10 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                let pivot_row = a[col].clone();
                for (x, p) in a[row][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= f * p;
                }
                b[row] -= f * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Some(x)
}

/// Random LP with ≤ 6 variables and ≤ 8 rows, every variable boxed so the
/// feasible region is bounded. Fewer than n equality rows. A share of the
/// rows get a negative slack, which makes some programs infeasible.
pub fn random_small_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.gen_range(1..=6);
    let m = rng.gen_range(0..=8);
    let objective: Vec<f64> = (0..n).map(|_| rng.gen_range(-5i32..=5) as f64).collect();
    let mut lp = LinearProgram::new(objective);
    let mut anchor = Vec::with_capacity(n);
    for j in 0..n {
        let lower = rng.gen_range(-5.0..1.0);
        let upper = lower + rng.gen_range(0.5..8.0);
        lp.set_bound(j, lower, upper);
        anchor.push(rng.gen_range(lower..upper));
    }
    let mut equalities = 0;
    for _ in 0..m {
        let a: Vec<f64> = loop {
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(-4i32..=4) as f64).collect();
            if a.iter().any(|&v| v != 0.0) {
                break a;
            }
        };
        let at_anchor: f64 = a.iter().zip(&anchor).map(|(x, y)| x * y).sum();
        let roll: f64 = rng.gen();
        let (relation, rhs) = if roll < 0.12 && equalities + 1 < n {
            equalities += 1;
            (Relation::Equal, at_anchor)
        } else if roll < 0.56 {
            let slack = if rng.gen_bool(0.85) {
                rng.gen_range(0.0..3.0)
            } else {
                -rng.gen_range(3.0..30.0)
            };
            (Relation::LessEq, at_anchor + slack)
        } else {
            let slack = if rng.gen_bool(0.85) {
                rng.gen_range(0.0..3.0)
            } else {
                -rng.gen_range(3.0..30.0)
            };
            (Relation::GreaterEq, at_anchor - slack)
        };
        lp.add_constraint(a, relation, rhs);
    }
    lp
}

/// Exhaustive search over powers on a `step`-kW grid for a short window.
///
/// Returns the cheapest grid schedule whose temperatures at steps 1..=K stay
/// within `[t_min, t_max]`, together with its cost in cents.
#[allow(clippy::too_many_arguments)]
pub fn grid_search(
    t0: f64,
    t_out: &[f64],
    prices: &[f64],
    epsilon: f64,
    gamma: f64,
    (t_min, t_max): (f64, f64),
    (p_min, p_max): (f64, f64),
    step: f64,
) -> Option<(f64, Vec<f64>)> {
    let levels: Vec<f64> = {
        let count = ((p_max - p_min) / step).round() as usize;
        (0..=count)
            .map(|i| p_min + i as f64 * step)
            .filter(|p| *p <= p_max + 1e-12)
            .collect()
    };
    let k = prices.len();
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut idx = vec![0usize; k];
    loop {
        let mut t = t0;
        let mut cost = 0.0;
        let mut ok = true;
        for s in 0..k {
            let p = levels[idx[s]];
            t = epsilon * t + (1.0 - epsilon) * (t_out[s] + gamma * p);
            if t < t_min - 1e-9 || t > t_max + 1e-9 {
                ok = false;
                break;
            }
            cost += prices[s] * p;
        }
        if ok && best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, idx.iter().map(|&i| levels[i]).collect()));
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == k {
                return best;
            }
            idx[pos] += 1;
            if idx[pos] < levels.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
