use fraczeta::cardinality::{
    axiom_suite, catalog, compare, conservation_report, table1_rows, Comparison,
};
use fraczeta::zeta::ZetaParams;

#[test]
fn catalog_order_is_consistent_with_table() {
    let cat = catalog(ZetaParams::new(500, 10, 40)).unwrap();
    let get = |n: &str| &cat.iter().find(|e| e.name == n).unwrap().cardinality;
    assert_eq!(
        compare(get("pess"), get("cantor13")).outcome,
        Comparison::Greater
    );
    assert_eq!(
        compare(get("unit-interval"), get("pess")).outcome,
        Comparison::Greater
    );
    assert_eq!(compare(get("pess"), get("zf")).outcome, Comparison::Greater);
    assert_eq!(
        compare(get("cantor"), get("pess")).outcome,
        Comparison::Greater
    );
    assert_eq!(
        compare(get("trivial-zeros"), get("cantor13")).outcome,
        Comparison::Less
    );
    assert_eq!(table1_rows(&cat).len(), 5);
}

#[test]
fn conservation_and_axioms() {
    let params = ZetaParams::new(500, 10, 40);
    let r = conservation_report(params).unwrap();
    assert!(r.sum_is_zero);
    assert!(axiom_suite(params).unwrap().all_pass());
}
