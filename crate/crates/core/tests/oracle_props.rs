use laplace_qho::oracle::fd::sign_changes;
use laplace_qho::oracle::{fd_hamiltonian, inner_product, lowest_eigenvalues, Grid, OracleConfig, Quadrature};
use laplace_qho::{
    assemble_wavefunction, build_transform, eval_wavefunction, invert_transform, normalize, Eigenfunction, ExactScalar,
    QuantumNumbers, Units,
};

fn normalized(total: u32) -> Eigenfunction {
    let qn = QuantumNumbers::from_total_index(total);
    let ts = build_transform(qn.parity(), qn.n(), ExactScalar::one()).unwrap();
    let ef = assemble_wavefunction(&invert_transform(&ts).unwrap(), &qn, &Units::default()).unwrap();
    normalize(&ef, &Quadrature::relative(1e-13)).unwrap()
}

fn eigenvalues(points: usize, count: usize) -> Vec<f64> {
    let units = Units::default();
    let grid = Grid::new(10.0, points, &units).unwrap();
    lowest_eigenvalues(&fd_hamiltonian(&grid, &units), count, 1e-12).unwrap()
}

#[test]
fn second_order_convergence() {
    let coarse = eigenvalues(1001, 11);
    let fine = eigenvalues(2001, 11);
    for n in 0..=10 {
        let exact = n as f64 + 0.5;
        let ratio = (coarse[n] - exact) / (fine[n] - exact);
        assert!((3.5..=4.5).contains(&ratio), "N={n} ratio={ratio}");
    }
}

#[test]
fn sturm_count_matches_analytic_count() {
    let units = Units::default();
    let op = fd_hamiltonian(&Grid::new(10.0, 2001, &units).unwrap(), &units);
    for eps in [1.0, 4.0, 9.7] {
        let analytic = (0..100).filter(|n| f64::from(*n) + 0.5 < eps).count();
        assert_eq!(op.sturm_count(eps), analytic, "ε={eps}");
    }
}

#[test]
fn ground_state_vector_overlap() {
    let units = Units::default();
    let grid = Grid::new(10.0, 2001, &units).unwrap();
    let op = fd_hamiltonian(&grid, &units);
    let e0 = lowest_eigenvalues(&op, 1, 1e-13).unwrap()[0];
    let v = op.eigenvector(e0);
    let psi = normalized(0);
    let sampled: Vec<f64> = grid.interior().map(|x| eval_wavefunction(&psi, x)).collect();
    let norm = sampled.iter().map(|x| x * x).sum::<f64>().sqrt();
    let overlap: f64 = v.iter().zip(&sampled).map(|(a, b)| a * b).sum::<f64>() / norm;
    assert!(overlap.abs() > 1.0 - 1e-6, "overlap {overlap}");
}

#[test]
fn node_counts_agree() {
    let units = Units::default();
    let grid = Grid::new(10.0, 2001, &units).unwrap();
    let op = fd_hamiltonian(&grid, &units);
    let evs = lowest_eigenvalues(&op, 9, 1e-12).unwrap();
    for (total, e) in evs.iter().enumerate() {
        let ef = normalized(total as u32);
        assert_eq!(ef.node_count(), total, "analytic N={total}");
        assert_eq!(sign_changes(&op.eigenvector(*e), 1e-8), total, "FD N={total}");
    }
}

#[test]
fn normalization_and_orthogonality_spot_checks() {
    let g = normalized(0);
    assert!((g.normalization() - std::f64::consts::PI.powf(-0.25)).abs() < 1e-10);
    let (p2, p4) = (normalized(2), normalized(4));
    assert!(inner_product(&p2, &p4, 1e-12).unwrap().abs() < 1e-10);
    assert!((inner_product(&p4, &p4, 1e-12).unwrap() - 1.0).abs() < 1e-10);
    assert!(inner_product(&normalized(0), &normalized(1), 1e-12).unwrap().abs() < 1e-12);
}

#[test]
fn normalization_matches_closed_form_in_units() {
    let units = Units::new(0.5, 2.0, 3.0).unwrap();
    for total in 0..6u32 {
        let qn = QuantumNumbers::from_total_index(total);
        let ts = build_transform(qn.parity(), qn.n(), ExactScalar::one()).unwrap();
        let phi = invert_transform(&ts).unwrap();
        let ef = normalize(&assemble_wavefunction(&phi, &qn, &units).unwrap(), &Quadrature::relative(1e-13)).unwrap();
        let lambda = laplace_qho::match_to_hermite(&phi, &qn).unwrap().constant.to_f64();
        let expected = laplace_qho::inversion::hermite_normalization(total, &units);
        assert!((ef.normalization() * lambda - expected).abs() < 1e-10 * expected, "N={total}");
        assert!((inner_product(&ef, &ef, 1e-12).unwrap() - 1.0).abs() < 1e-10);
    }
}

#[test]
fn high_states_normalize_to_closed_form() {
    // alternating coefficients of size ~N!; plain Horner loses the integral here
    let units = Units::dimensionless();
    for total in [20u32, 30, 40] {
        let ef = normalized(total);
        let qn = QuantumNumbers::from_total_index(total);
        let lambda = laplace_qho::match_to_hermite(ef.phi(), &qn).unwrap().constant.to_f64();
        let expected = laplace_qho::inversion::hermite_normalization(total, &units);
        assert!((ef.normalization() * lambda - expected).abs() < 1e-11 * expected, "N={total}");
    }
    let (a, b) = (normalized(29), normalized(31));
    assert!(inner_product(&a, &b, 1e-12).unwrap().abs() < 1e-10);
}

#[test]
fn lowest_eigenvalues_is_deterministic() {
    assert_eq!(eigenvalues(501, 5), eigenvalues(501, 5));
    assert_eq!(OracleConfig::default().grid_points, 2001);
}
