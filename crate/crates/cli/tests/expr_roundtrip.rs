use freelnd::ncalg::Rational;
use freelnd_cli::expr::{eval, parse, Expr};
use proptest::prelude::*;

fn literal() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        literal().prop_map(Expr::Num),
        Just(Expr::X),
        Just(Expr::Y),
        (1usize..=3).prop_map(Expr::T),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            inner.clone().prop_map(move |x| Expr::Neg(b(x))),
            (inner.clone(), 0u32..=3).prop_map(move |(x, k)| Expr::Pow(b(x), k)),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Comm(b(x), b(y))),
            inner.prop_map(move |x| Expr::Box(b(x))),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e, "printed as {}", printed);
    }

    #[test]
    fn printing_is_stable(e in expr()) {
        let once = e.to_string();
        prop_assert_eq!(parse(&once).unwrap().to_string(), once);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_polynomial_parses_back(e in expr()) {
        let f = freelnd::ncalg::NCPoly::x();
        let value = eval(&e, Some(&f)).unwrap();
        prop_assume!(value.len() <= 200);
        let reparsed = eval(&parse(&value.to_string()).unwrap(), None).unwrap();
        prop_assert_eq!(reparsed, value);
    }
}
