use num_traits::{One, Signed, Zero};

use super::{KernelError, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x  (relation)  rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        LinearConstraint { coeffs, relation, rhs }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether the constraints admit a real (hence rational) point.
///
/// All `num_vars` variables are free; sign restrictions are ordinary
/// constraints. Phase-one simplex over exact rationals with Bland's rule.
pub fn lp_feasible(num_vars: usize, constraints: &[LinearConstraint]) -> Result<Feasibility, KernelError> {
    if let Some(c) = constraints.iter().find(|c| c.coeffs.len() != num_vars) {
        return Err(KernelError::DimensionMismatch(format!(
            "constraint has {} coefficients, expected {num_vars}",
            c.coeffs.len()
        )));
    }
    if constraints.is_empty() {
        return Ok(Feasibility::Feasible(vec![Rational::zero(); num_vars]));
    }

    // columns: x+ (n) | x- (n) | slacks | artificials (m)
    let m = constraints.len();
    let n = num_vars;
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let art0 = 2 * n + slack_count;
    let width = art0 + m;

    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut slack = 2 * n;
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[n + j] = -a;
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            b = -b;
        }
        row[art0 + i] = Rational::one();
        tab.push(row);
        rhs.push(b);
    }
    let mut basis: Vec<usize> = (art0..width).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..art0 {
            cost[j] -= &row[j];
        }
    }

    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &rhs[i] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (pr, _) = leave.expect("phase-one simplex is bounded");
        pivot(&mut tab, &mut rhs, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    let infeasibility: Rational = basis
        .iter()
        .zip(&rhs)
        .filter(|(&v, _)| v >= art0)
        .fold(Rational::zero(), |acc, (_, b)| acc + b);
    if !infeasibility.is_zero() {
        return Ok(Feasibility::Infeasible);
    }

    let mut values = vec![Rational::zero(); width];
    for (&v, b) in basis.iter().zip(&rhs) {
        values[v] = b.clone();
    }
    let x: Vec<Rational> = (0..n).map(|j| &values[j] - &values[n + j]).collect();
    debug_assert!(constraints.iter().all(|c| c.is_satisfied(&x)));
    Ok(Feasibility::Feasible(x))
}

fn pivot(tab: &mut [Vec<Rational>], rhs: &mut [Rational], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = Rational::one() / &tab[pr][pc];
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    rhs[pr] *= &inv;
    let prow = tab[pr].clone();
    let prhs = rhs[pr].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
        rhs[i] -= &f * &prhs;
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, rat_frac};

    fn nonneg(n: usize) -> Vec<LinearConstraint> {
        (0..n)
            .map(|i| {
                let mut c = vec![rat(0); n];
                c[i] = rat(1);
                LinearConstraint::new(c, Relation::Ge, rat(0))
            })
            .collect()
    }

    #[test]
    fn simplex_sum_one() {
        let mut cons = nonneg(2);
        cons.push(LinearConstraint::new(vec![rat(1), rat(1)], Relation::Eq, rat(1)));
        let Feasibility::Feasible(w) = lp_feasible(2, &cons).unwrap() else { panic!() };
        assert!(cons.iter().all(|c| c.is_satisfied(&w)));
        assert_eq!(w.iter().sum::<Rational>(), rat(1));
    }

    // point p in conv{(2,0),(0,2)} + R^2_{>=0}: lambda >= 0, sum = 1, 2*l1 <= p1, 2*l2 <= p2
    fn newton_point(p: (i64, i64)) -> Vec<LinearConstraint> {
        let mut cons = nonneg(2);
        cons.push(LinearConstraint::new(vec![rat(1), rat(1)], Relation::Eq, rat(1)));
        cons.push(LinearConstraint::new(vec![rat(2), rat(0)], Relation::Le, rat(p.0)));
        cons.push(LinearConstraint::new(vec![rat(0), rat(2)], Relation::Le, rat(p.1)));
        cons
    }

    #[test]
    fn midpoint_in_newton_polyhedron() {
        let Feasibility::Feasible(w) = lp_feasible(2, &newton_point((1, 1))).unwrap() else { panic!() };
        assert_eq!(w, vec![rat_frac(1, 2), rat_frac(1, 2)]);
    }

    #[test]
    fn origin_not_in_newton_polyhedron() {
        assert_eq!(lp_feasible(2, &newton_point((0, 0))).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn free_variables_can_go_negative() {
        let cons = vec![LinearConstraint::new(vec![rat(1)], Relation::Le, rat(-3))];
        let Feasibility::Feasible(w) = lp_feasible(1, &cons).unwrap() else { panic!() };
        assert!(w[0] <= rat(-3));
    }

    #[test]
    fn contradictory_bounds() {
        let cons = vec![
            LinearConstraint::new(vec![rat(1), rat(1)], Relation::Ge, rat(3)),
            LinearConstraint::new(vec![rat(1), rat(1)], Relation::Le, rat(2)),
        ];
        assert_eq!(lp_feasible(2, &cons).unwrap(), Feasibility::Infeasible);
    }
}
