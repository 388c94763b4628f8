use fraczeta::zeta::{functional_equation_residual, zeta_at, ZetaParams};
use fraczeta::Error;

#[test]
fn even_zeta_values() {
    let pi = std::f64::consts::PI;
    let z2 = zeta_at("2", ZetaParams::new(1000, 10, 40)).unwrap();
    assert!((z2.value.to_f64() - pi * pi / 6.0).abs() < 1e-12);
    let z4 = zeta_at("4", ZetaParams::new(1000, 10, 40)).unwrap();
    assert!((z4.value.to_f64() - pi.powi(4) / 90.0).abs() < 1e-13);
}

#[test]
fn half_agrees_with_published_digits() {
    let z = zeta_at("0.5", ZetaParams::new(10_000, 10, 50)).unwrap();
    assert_eq!(z.value.to_sig_string(12), "-1.46035450881");
    assert!(z
        .value
        .to_string()
        .starts_with("-1.46035450880958681288949915251"));
}

#[test]
fn functional_equation_in_the_strip() {
    for s in ["0.3", "0.5", "0.7", "1/4"] {
        let s = fraczeta::rational::parse_rational(s).unwrap();
        let c = functional_equation_residual(&s, ZetaParams::new(1000, 10, 40)).unwrap();
        assert!(c.residual < 1e-10);
    }
}

#[test]
fn pole_and_left_half_plane() {
    assert!(matches!(
        zeta_at("1", ZetaParams::default()),
        Err(Error::Pole)
    ));
    assert!(matches!(
        zeta_at("-2", ZetaParams::default()),
        Err(Error::Domain(_))
    ));
}
