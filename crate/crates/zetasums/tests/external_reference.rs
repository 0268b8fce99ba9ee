//! Frozen reference values computed independently with mpmath 1.3.0 at 30
//! significant digits (gamma/digamma/zeta/hyp2f1 plus adaptive quadrature
//! for the integrals). These pin the library against an implementation that
//! shares none of its code paths.

use zetasums::double_sums::{s1_closed, s2_closed, s2_integer_sum};
use zetasums::gamma::{digamma, gamma};
use zetasums::hurwitz::hurwitz_zeta;
use zetasums::hyp2f1::gauss_2f1;
use zetasums::integrals::{
    i_critical_line, i_via_2f1, i_via_zeta, j_critical_line, j_via_zeta, ParameterPair,
};
use zetasums::moments::h_integer;
use zetasums::zeta::{riemann_zeta, zeta_deriv};
use zetasums::{cplx, Complex, DEFAULT_TOL};

fn assert_close(got: Complex, want: Complex, rel: f64, what: &str) {
    let err = (got - want).norm() / want.norm().max(1.0);
    assert!(err <= rel, "{what}: got {got}, want {want} (rel err {err:.3e})");
}

#[test]
fn scalar_special_functions() {
    assert_close(
        gamma(cplx(5.5, 2.0)).unwrap(),
        cplx(-35.1762221706768820178282583127, -4.6380137263126156919470218698),
        1e-13,
        "gamma(5.5+2i)",
    );
    assert_close(
        digamma(cplx(0.5, 2.0)).unwrap(),
        cplx(0.682186699349424268141940377609, 1.57078537102397632450647692458),
        1e-13,
        "digamma(0.5+2i)",
    );
    assert_close(
        riemann_zeta(cplx(2.3, 0.5)).unwrap(),
        cplx(1.33463089797410257146088394091, -0.228119820293121325366543835229),
        1e-13,
        "zeta(2.3+0.5i)",
    );
    assert_close(
        riemann_zeta(cplx(-15.5, 0.0)).unwrap(),
        cplx(0.49627121991205760786953537789, 0.0),
        1e-13,
        "zeta(-15.5)",
    );
    assert_close(
        zeta_deriv(cplx(-1.0, 0.0)).unwrap(),
        cplx(-0.165421143700450929213919660243, 0.0),
        1e-12,
        "zeta'(-1)",
    );
}

#[test]
fn hurwitz_zeta_across_routes() {
    // Euler-Maclaurin branch
    assert_close(
        hurwitz_zeta(cplx(2.3, 0.0), 0.37).unwrap(),
        cplx(10.6579295150253083675533493487, 0.0),
        1e-13,
        "zeta(2.3, 0.37)",
    );
    // reflected branch with shift reduction
    assert_close(
        hurwitz_zeta(cplx(-4.5, 0.0), 2.25).unwrap(),
        cplx(-2.72845412268654464779448270903, 0.0),
        1e-12,
        "zeta(-4.5, 2.25)",
    );
    // reflected branch with complex exponent
    assert_close(
        hurwitz_zeta(cplx(-3.2, 1.4), 0.6).unwrap(),
        cplx(-0.0215386970925287339048483375379, -0.00865365549001499951927251757534),
        1e-11,
        "zeta(-3.2+1.4i, 0.6)",
    );
    // large shift
    assert_close(
        hurwitz_zeta(cplx(2.2, 0.0), 5.3).unwrap(),
        cplx(0.126265605297545110663945068614, 0.0),
        1e-13,
        "zeta(2.2, 5.3)",
    );
}

#[test]
fn gauss_2f1_every_near_unit_branch() {
    let z = cplx(0.9, 0.0);
    // generic non-integer difference
    assert_close(
        gauss_2f1(cplx(1.7, 0.0), cplx(2.4, 0.0), cplx(4.83, 0.0), z, DEFAULT_TOL)
            .unwrap()
            .value,
        cplx(3.94946311613764982953556191054, 0.0),
        1e-12,
        "2F1 generic connection",
    );
    // difference +1
    assert_close(
        gauss_2f1(cplx(1.7, 0.0), cplx(2.4, 0.0), cplx(5.1, 0.0), z, DEFAULT_TOL)
            .unwrap()
            .value,
        cplx(3.51911461360780254177842502013, 0.0),
        1e-12,
        "2F1 log case, difference +1",
    );
    // difference 0
    assert_close(
        gauss_2f1(cplx(1.7, 0.0), cplx(2.4, 0.0), cplx(4.1, 0.0), z, DEFAULT_TOL)
            .unwrap()
            .value,
        cplx(6.01986840108646332750244388461, 0.0),
        1e-12,
        "2F1 log case, difference 0",
    );
    // difference -2
    assert_close(
        gauss_2f1(cplx(1.7, 0.0), cplx(2.4, 0.0), cplx(2.1, 0.0), z, DEFAULT_TOL)
            .unwrap()
            .value,
        cplx(93.7148289162414099571041726517, 0.0),
        1e-12,
        "2F1 log case, difference -2",
    );
    // difference -2 with an integer upper parameter
    assert_close(
        gauss_2f1(cplx(3.0, 0.0), cplx(4.2, 0.0), cplx(5.2, 0.0), z, DEFAULT_TOL)
            .unwrap()
            .value,
        cplx(180.297982391729794073275598563, 0.0),
        1e-12,
        "2F1 log case, integer parameter",
    );
}

#[test]
fn product_integrals() {
    let p = ParameterPair::new(cplx(2.3, 0.0), cplx(3.7, 0.0));
    let want = cplx(0.354463140752054733585990384686, 0.0);
    assert_close(i_via_zeta(p, DEFAULT_TOL).unwrap().value, want, 1e-12, "I zeta series");
    assert_close(i_via_2f1(p, DEFAULT_TOL).unwrap().value, want, 1e-10, "I hypergeometric");

    let p = ParameterPair::new(cplx(2.5, 0.0), cplx(3.5, 0.0));
    assert_close(
        j_via_zeta(p, DEFAULT_TOL).unwrap().value,
        cplx(0.209866271054910814172798291603, 0.0),
        1e-12,
        "J zeta series",
    );
}

#[test]
fn critical_line_values() {
    assert_close(
        i_critical_line(1.0, DEFAULT_TOL).unwrap().value,
        cplx(0.88512972565114555237509184915, 0.0),
        1e-12,
        "I on the critical line",
    );
    assert_close(
        j_critical_line(1.0, DEFAULT_TOL).unwrap().value,
        cplx(0.717964301539425667315233361184, 0.0),
        1e-12,
        "J on the critical line",
    );
}

#[test]
fn moments_and_double_sums() {
    let got = h_integer(3, 2).unwrap();
    let want = 0.687073072509779789450959157678;
    assert!((got - want).abs() <= 1e-13, "H_3(2): {got} vs {want}");

    assert_close(
        s1_closed(cplx(0.25, 0.0), cplx(0.25, 0.0)).unwrap(),
        cplx(-0.352247859898479414125194380909, 0.0),
        1e-13,
        "S1 closed form",
    );
    assert_close(
        s2_closed(cplx(0.25, 0.0), cplx(0.25, 0.0)).unwrap(),
        cplx(0.498153700785327463112777848916, 0.0),
        1e-13,
        "S2 closed form",
    );
    assert_close(
        s2_integer_sum(cplx(0.5, 0.0), -1).unwrap(),
        cplx(-0.0228363427937949530851886478534, 0.0),
        1e-13,
        "S2 integer-sum odd case",
    );
}
