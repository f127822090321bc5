use crate::algebra::{Matrix, ResidueConvention, RfMatrix, Scalar};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// Residue of one quantum multiplication operator along an exceptional divisor `q_b = 1`.
#[derive(Clone, Debug)]
pub struct Residue {
    pub variable: String,
    pub convention: ResidueConvention,
    /// Exceptional variables set to 1 after taking the residue.
    pub evaluated: Vec<String>,
    pub matrix: Matrix,
    pub nilpotency: u32,
}

/// Residues of several operators; one per exceptional variable.
#[derive(Clone, Debug)]
pub struct ResidueData {
    pub residues: Vec<Residue>,
}

impl ResidueData {
    pub fn matrices(&self) -> Vec<Matrix> {
        self.residues.iter().map(|r| r.matrix.clone()).collect()
    }

    /// Self-adjointness of every residue for the given pairing.
    pub fn check_self_adjoint(&self, pairing: &Matrix) -> Vec<Verdict> {
        self.residues
            .iter()
            .map(|r| self_adjoint(&r.matrix, pairing, &format!("N[{}] self-adjoint", r.variable)))
            .collect()
    }
}

/// `Res_{q_var=1}` of `op` entrywise, then every variable in `then_one` set to 1.
///
/// The result must be constant; a surviving Novikov variable is a theorem violation.
pub fn residue_matrix(
    op: &RfMatrix,
    var: usize,
    then_one: &[usize],
    convention: ResidueConvention,
    names: &[String],
) -> Result<Matrix> {
    let r = op.try_map(|x| x.residue_at_one(var, convention, names))?;
    let r = r.substitute_all(&ones(then_one))?;
    r.to_scalar().ok_or_else(|| {
        Error::TheoremViolation(format!("residue along {}=1 depends on a remaining Novikov variable", names[var]))
    })
}

fn ones(vars: &[usize]) -> Vec<(usize, Scalar)> {
    vars.iter().map(|&k| (k, Scalar::from_int(1))).collect()
}

/// The opposite order: the other exceptional variables are set to 1 first.
pub fn residue_matrix_reversed(
    op: &RfMatrix,
    var: usize,
    first_one: &[usize],
    convention: ResidueConvention,
    names: &[String],
) -> Result<Matrix> {
    let r = op.substitute_all(&ones(first_one))?;
    let r = r.try_map(|x| x.residue_at_one(var, convention, names))?;
    r.to_scalar().ok_or_else(|| {
        Error::TheoremViolation(format!("residue along {}=1 depends on a remaining Novikov variable", names[var]))
    })
}

/// Residues of `ops[b]` along `exceptional[b] = 1`, with the other exceptional variables then set to 1.
pub fn compute_residues(
    ops: &[RfMatrix],
    exceptional: &[usize],
    convention: ResidueConvention,
    names: &[String],
) -> Result<ResidueData> {
    if ops.len() != exceptional.len() {
        return Err(crate::error::structural("one operator per exceptional variable"));
    }
    let mut residues = Vec::with_capacity(ops.len());
    for (op, &var) in ops.iter().zip(exceptional) {
        let others: Vec<usize> = exceptional.iter().copied().filter(|&k| k != var).collect();
        let matrix = residue_matrix(op, var, &others, convention, names)?;
        let nilpotency = matrix
            .nilpotency_index()
            .ok_or_else(|| Error::TheoremViolation(format!("residue along {}=1 is not nilpotent", names[var])))?;
        residues.push(Residue {
            variable: names[var].clone(),
            convention,
            evaluated: others.iter().map(|&k| names[k].clone()).collect(),
            matrix,
            nilpotency,
        });
    }
    Ok(ResidueData { residues })
}

/// `<Nx, y> = <x, Ny>` for all basis vectors, i.e. `Nᵀ G = G N`.
pub fn self_adjoint(n: &Matrix, pairing: &Matrix, check: &str) -> Verdict {
    let lhs = &n.transpose() * pairing;
    let rhs = pairing * n;
    let k = n.rows();
    let bad = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).find(|&(i, j)| lhs.get(i, j) != rhs.get(i, j));
    Verdict::from_witness(
        check,
        bad.map(|(i, j)| format!("<N e{i}, e{j}> = {} but <e{i}, N e{j}> = {}", lhs.get(i, j), rhs.get(i, j))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_rational;

    fn names() -> Vec<String> {
        vec!["q1".into(), "q2".into()]
    }

    fn rf(s: &str) -> crate::algebra::RationalFunction {
        parse_rational(s, &names()).unwrap()
    }

    #[test]
    fn simple_pole_gives_constant_residue() {
        let m = RfMatrix::from_rows(2, vec![vec![rf("0"), rf("0")], vec![rf("2*q2/(1-q2)"), rf("q1")]]).unwrap();
        let n = residue_matrix(&m, 1, &[], ResidueConvention::Plain, &names()).unwrap();
        assert_eq!(n.get(1, 0), &Scalar::from_int(2));
        assert!(n.get(1, 1) == &Scalar::from_int(0));
        let d = residue_matrix(&m, 1, &[], ResidueConvention::Dlog, &names()).unwrap();
        assert_eq!(d.get(1, 0), &Scalar::from_int(-2));
    }

    #[test]
    fn novikov_dependence_is_a_violation() {
        let m = RfMatrix::from_rows(2, vec![vec![rf("0"), rf("0")], vec![rf("q1/(1-q2)"), rf("0")]]).unwrap();
        let e = residue_matrix(&m, 1, &[], ResidueConvention::Plain, &names()).unwrap_err();
        assert!(matches!(e, Error::TheoremViolation(_)));
    }

    #[test]
    fn regular_operator_has_zero_residue() {
        let m = RfMatrix::from_rows(2, vec![vec![rf("1+q1"), rf("q2")], vec![rf("0"), rf("1")]]).unwrap();
        let n = residue_matrix(&m, 1, &[], ResidueConvention::Plain, &names()).unwrap();
        assert!(n.is_zero());
    }

    #[test]
    fn non_nilpotent_residue_is_rejected() {
        let m = RfMatrix::from_rows(2, vec![vec![rf("1/(1-q2)"), rf("0")], vec![rf("0"), rf("0")]]).unwrap();
        let e = compute_residues(&[m], &[1], ResidueConvention::Plain, &names()).unwrap_err();
        assert!(matches!(e, Error::TheoremViolation(_)));
    }

    #[test]
    fn self_adjoint_against_antidiagonal_pairing() {
        let g = Matrix::from_rows(vec![
            vec![Scalar::from_int(0), Scalar::from_int(1)],
            vec![Scalar::from_int(1), Scalar::from_int(0)],
        ]);
        let n = Matrix::from_rows(vec![
            vec![Scalar::from_int(0), Scalar::from_int(0)],
            vec![Scalar::from_int(3), Scalar::from_int(0)],
        ]);
        assert!(self_adjoint(&n, &g, "x").pass);
        let bad = Matrix::from_rows(vec![
            vec![Scalar::from_int(1), Scalar::from_int(0)],
            vec![Scalar::from_int(0), Scalar::from_int(0)],
        ]);
        assert!(!self_adjoint(&bad, &g, "x").pass);
    }
}
