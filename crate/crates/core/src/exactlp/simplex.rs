//! Phase-one simplex with Bland's rule.
//!
//! Systems whose rows scale to `i128` integers run a revised simplex that
//! keeps the basis inverse as an integer adjugate over its determinant and
//! updates it by exact (Bareiss) division. Anything that overflows falls
//! back to a dense rational tableau. Both follow the same pivot rule.

use num_integer::Integer;

use super::{Feasibility, FeasibilitySystem, Rational};

/// Maps a tableau column back to a signed original variable, or a slack.
#[derive(Clone, Copy)]
enum Column {
    Var { var: usize, negated: bool },
    Slack,
}

/// `A y = b, y ≥ 0, b ≥ 0` over the split and slacked columns.
struct StandardForm {
    columns: Vec<Column>,
    /// One row per constraint; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
}

impl StandardForm {
    fn new(sys: &FeasibilitySystem) -> Self {
        let n = sys.num_vars();
        let mut columns = Vec::new();
        let mut var_cols = Vec::with_capacity(n);
        for var in 0..n {
            var_cols.push(columns.len());
            columns.push(Column::Var { var, negated: false });
            if !sys.is_nonneg(var) {
                columns.push(Column::Var { var, negated: true });
            }
        }
        let num_slacks = sys.inequalities().len();
        let width = columns.len() + num_slacks;
        columns.extend(std::iter::repeat_n(Column::Slack, num_slacks));

        let mut rows = Vec::with_capacity(sys.equalities().len() + num_slacks);
        let constraints = sys
            .equalities()
            .iter()
            .map(|c| (c, None))
            .chain(sys.inequalities().iter().enumerate().map(|(k, c)| (c, Some(k))));
        for (c, slack) in constraints {
            let mut row = vec![Rational::zero(); width + 1];
            for (var, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let col = var_cols[var];
                row[col] = a.clone();
                if !sys.is_nonneg(var) {
                    row[col + 1] = -a;
                }
            }
            if let Some(k) = slack {
                row[width - num_slacks + k] = Rational::from_integer(-1);
            }
            row[width] = c.rhs.clone();
            if c.rhs.is_negative() {
                for v in row.iter_mut() {
                    *v = -&*v;
                }
            }
            rows.push(row);
        }
        StandardForm { columns, rows }
    }

    fn width(&self) -> usize {
        self.columns.len()
    }

    /// Recovers the original variables from the basic solution.
    fn witness(&self, num_vars: usize, basic: impl Iterator<Item = (usize, Rational)>) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); num_vars];
        for (col, value) in basic {
            if let Column::Var { var, negated } = self.columns[col] {
                if negated {
                    x[var] -= &value;
                } else {
                    x[var] += &value;
                }
            }
        }
        x
    }
}

pub(super) fn phase_one(sys: &FeasibilitySystem) -> Feasibility {
    let form = StandardForm::new(sys);
    let outcome = IntegerForm::new(&form)
        .and_then(|f| f.solve())
        .unwrap_or_else(|| tableau_phase_one(&form));
    match outcome {
        None => Feasibility::Infeasible,
        Some(basic) => Feasibility::Feasible(form.witness(sys.num_vars(), basic.into_iter())),
    }
}

/// Basic structural columns with their values, or `None` if infeasible.
type Outcome = Option<Vec<(usize, Rational)>>;

/// Orders rows for Bland's leaving rule: by basic column, artificials last.
fn bland_order(basis: &[Option<usize>], width: usize, row: usize) -> usize {
    basis[row].unwrap_or(width + row)
}

struct IntegerForm {
    /// Column-major constraint matrix, every row scaled to integers.
    cols: Vec<Vec<i128>>,
    rhs: Vec<i128>,
    /// Phase-one cost of each row's artificial. Scaling a row scales its
    /// artificial too, so costs are `L / scale` to keep the objective, and
    /// hence the pivot sequence, identical to the unscaled tableau.
    weights: Vec<i128>,
}

fn lcm_of_denominators(row: &[Rational]) -> Option<i128> {
    row.iter().try_fold(1i128, |acc, v| {
        let (_, d) = v.as_small()?;
        let d = d as i128;
        let g = acc.gcd(&d);
        (acc / g).checked_mul(d)
    })
}

impl IntegerForm {
    fn new(form: &StandardForm) -> Option<Self> {
        let width = form.width();
        let mut cols = vec![Vec::with_capacity(form.rows.len()); width];
        let mut rhs = Vec::with_capacity(form.rows.len());
        let mut scales = Vec::with_capacity(form.rows.len());
        for row in &form.rows {
            let scale = lcm_of_denominators(row)?;
            scales.push(scale);
            let scaled = |v: &Rational| -> Option<i128> {
                let (n, d) = v.as_small()?;
                (n as i128).checked_mul(scale / d as i128)
            };
            for (j, v) in row[..width].iter().enumerate() {
                cols[j].push(scaled(v)?);
            }
            rhs.push(scaled(&row[width])?);
        }
        let l = scales
            .iter()
            .try_fold(1i128, |acc, s| (acc / acc.gcd(s)).checked_mul(*s))?;
        let weights = scales.iter().map(|s| l / s).collect();
        Some(IntegerForm { cols, rhs, weights })
    }

    /// `None` on arithmetic overflow; otherwise the phase-one outcome.
    fn solve(&self) -> Option<Outcome> {
        let m = self.rhs.len();
        let width = self.cols.len();
        // adj[i] holds row i of det·B⁻¹ followed by (det·B⁻¹b)_i.
        let mut adj: Vec<Vec<i128>> = (0..m)
            .map(|i| {
                let mut row = vec![0; m + 1];
                row[i] = 1;
                row[m] = self.rhs[i];
                row
            })
            .collect();
        let mut det: i128 = 1;
        let mut basis: Vec<Option<usize>> = vec![None; m];

        loop {
            // Phase-one prices: y = c_B B⁻¹ scaled by det. The reduced cost
            // of column j is -y·A_j / det, and det stays positive.
            let mut y = vec![0i128; m];
            for (i, b) in basis.iter().enumerate() {
                if b.is_none() {
                    for (yk, a) in y.iter_mut().zip(&adj[i][..m]) {
                        *yk = yk.checked_add(a.checked_mul(self.weights[i])?)?;
                    }
                }
            }
            let mut entering = None;
            for (j, col) in self.cols.iter().enumerate() {
                if dot(&y, col)? > 0 {
                    entering = Some(j);
                    break;
                }
            }
            let Some(q) = entering else { break };

            let w: Vec<i128> = adj
                .iter()
                .map(|row| dot(&row[..m], &self.cols[q]))
                .collect::<Option<_>>()?;
            let mut leave: Option<usize> = None;
            for i in 0..m {
                if w[i] <= 0 {
                    continue;
                }
                leave = match leave {
                    None => Some(i),
                    Some(r) => {
                        // Compare adj[i][m]/w[i] with adj[r][m]/w[r].
                        let lhs = adj[i][m].checked_mul(w[r])?;
                        let rhs = adj[r][m].checked_mul(w[i])?;
                        let better = lhs < rhs
                            || (lhs == rhs
                                && bland_order(&basis, width, i) < bland_order(&basis, width, r));
                        Some(if better { i } else { r })
                    }
                };
            }
            let r = leave.expect("phase-one objective is bounded below by zero");

            let pivot_row = adj[r].clone();
            for i in 0..m {
                if i == r {
                    continue;
                }
                for k in 0..=m {
                    let v = w[r]
                        .checked_mul(adj[i][k])?
                        .checked_sub(w[i].checked_mul(pivot_row[k])?)?;
                    adj[i][k] = v / det;
                }
            }
            det = w[r];
            basis[r] = Some(q);
        }

        let infeasible = basis
            .iter()
            .zip(&adj)
            .any(|(b, row)| b.is_none() && row[m] != 0);
        if infeasible {
            return Some(None);
        }
        Some(Some(
            basis
                .iter()
                .zip(&adj)
                .filter_map(|(b, row)| b.map(|col| (col, Rational::from_i128_ratio(row[m], det))))
                .collect(),
        ))
    }
}

fn dot(a: &[i128], b: &[i128]) -> Option<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (x, y)| {
        if *x == 0 || *y == 0 {
            Some(acc)
        } else {
            acc.checked_add(x.checked_mul(*y)?)
        }
    })
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Phase-one reduced costs, one per structural column.
    costs: Vec<Rational>,
    /// Basic column of each row; `None` while the row's artificial is basic.
    basis: Vec<Option<usize>>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.costs.len()
    }

    /// Bland: lowest-index column with a negative reduced cost.
    fn entering(&self) -> Option<usize> {
        self.costs.iter().position(Rational::is_negative)
    }

    /// Minimum ratio test; ties go to the lowest basic variable index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.width();
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[col];
            best = match best {
                None => Some((i, ratio)),
                Some((j, b)) => match ratio.cmp(&b) {
                    std::cmp::Ordering::Less => Some((i, ratio)),
                    std::cmp::Ordering::Equal
                        if bland_order(&self.basis, rhs, i) < bland_order(&self.basis, rhs, j) =>
                    {
                        Some((i, ratio))
                    }
                    _ => Some((j, b)),
                },
            };
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, prow: usize, pcol: usize) {
        let inv = self.rows[prow][pcol].recip();
        for v in self.rows[prow].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[prow]);
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == prow || row[pcol].is_zero() {
                continue;
            }
            let factor = row[pcol].clone();
            eliminate(row, &pivot_row, &factor);
        }
        if !self.costs[pcol].is_zero() {
            let factor = self.costs[pcol].clone();
            let width = self.width();
            eliminate(&mut self.costs, &pivot_row[..width], &factor);
        }
        self.rows[prow] = pivot_row;
        self.basis[prow] = Some(pcol);
    }
}

fn eliminate(row: &mut [Rational], pivot_row: &[Rational], factor: &Rational) {
    for (v, p) in row.iter_mut().zip(pivot_row) {
        if !p.is_zero() {
            *v -= &(factor * p);
        }
    }
}

fn tableau_phase_one(form: &StandardForm) -> Outcome {
    let width = form.width();
    let rows = form.rows.clone();
    let mut costs = vec![Rational::zero(); width];
    for row in &rows {
        for (c, v) in costs.iter_mut().zip(row) {
            if !v.is_zero() {
                *c -= v;
            }
        }
    }

    let basis = vec![None; rows.len()];
    let mut t = Tableau { rows, costs, basis };
    while let Some(col) = t.entering() {
        let row = t
            .leaving(col)
            .expect("phase-one objective is bounded below by zero");
        t.pivot(row, col);
    }

    let infeasible = t
        .basis
        .iter()
        .zip(&t.rows)
        .any(|(b, row)| b.is_none() && !row[width].is_zero());
    if infeasible {
        return None;
    }
    Some(
        t.basis
            .iter()
            .zip(&t.rows)
            .filter_map(|(b, row)| b.map(|col| (col, row[width].clone())))
            .collect(),
    )
}
