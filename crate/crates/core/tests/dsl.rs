use pga_core::check::sample;
use pga_core::dsl::{self, BinOp, DslError, Environment, Expr, UnaryOp};
use pga_core::{Algebra, GaError, Multivector, Pga};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CORPUS: [&str; 50] = [
    "a",
    "1",
    "2.5",
    "1e-3",
    "a + b",
    "a - b - c",
    "a - (b - c)",
    "a & b",
    "a ^ b",
    "a | b",
    "a * b",
    "~a",
    "!a",
    "#a",
    "-a",
    "a~",
    "a!",
    "a#",
    "a~~",
    "--a",
    "~!#a",
    "<a>2",
    "<a * b>0",
    "<<a>2>1",
    "((Pi | P) ^ Pi) & P",
    "(Pi | P) ^ (Pi & P)",
    "a & b & c",
    "a & (b & c)",
    "a ^ b ^ c",
    "a ^ (b ^ c)",
    "a | (b | c)",
    "(a | b) | c",
    "a * b * c",
    "a * (b * c)",
    "a + b * c",
    "(a + b) * c",
    "a * b + c",
    "a & b ^ c",
    "(a & b) ^ c",
    "a ^ b | c * d",
    "((a ^ b) | c) * d",
    "~(a * b)",
    "!(a & b)",
    "#(a + b)",
    "-(a - b)",
    "(a * b)~",
    "2 * e12 + 0.5 * e0",
    "e1 * e2 * e3",
    "~g * x * g",
    "<(a + b) * ~(a - b)>2 & (c ^ -d#)",
];

#[test]
fn corpus_round_trips() {
    for src in CORPUS {
        let ast = dsl::parse(src).unwrap_or_else(|e| panic!("{src}: {e}"));
        let printed = ast.to_string();
        let again = dsl::parse(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(again, ast, "{src} printed as {printed}");
        assert_eq!(again.to_string(), printed, "printing is not a fixed point for {src}");
    }
}

#[test]
fn minimal_parentheses() {
    let cases = [
        ("((Pi | P) ^ Pi) & P", "Pi | P ^ Pi & P"),
        ("(a * b) * c", "a * b * c"),
        ("a * (b * c)", "a * (b * c)"),
        ("(a + b) * c", "(a + b) * c"),
        ("-(a)", "-a"),
        ("(a)~", "~a"),
        ("((a))", "a"),
    ];
    for (src, want) in cases {
        assert_eq!(dsl::parse(src).unwrap().to_string(), want);
    }
}

#[test]
fn precedence_table() {
    let ops = [BinOp::Add, BinOp::Join, BinOp::Wedge, BinOp::Contract, BinOp::Product];
    for w in ops.windows(2) {
        assert!(w[0].precedence() < w[1].precedence());
    }
    assert_eq!(BinOp::Add.precedence(), BinOp::Sub.precedence());
}

#[test]
fn syntax_errors_report_position() {
    let cases =
        [("a &", (1, 4)), ("a ^^ b", (1, 4)), ("(a", (1, 3)), ("a\n  b", (2, 3)), ("<a>x", (1, 4)), ("a @ b", (1, 3))];
    for (src, pos) in cases {
        match dsl::parse(src) {
            Err(DslError::Syntax { line, column, .. }) => assert_eq!((line, column), pos, "{src}"),
            other => panic!("{src}: {other:?}"),
        }
    }
}

#[test]
fn evaluation_errors() {
    let alg = Algebra::pga(3).unwrap();
    let env = Environment::<f64>::new(&alg);
    assert_eq!(dsl::eval(&dsl::parse("q").unwrap(), &env), Err(DslError::Unbound("q".into())));
    assert!(matches!(
        dsl::eval(&dsl::parse("e11").unwrap(), &env),
        Err(DslError::Ga(GaError::RepeatedGenerator { .. }))
    ));
    assert!(matches!(
        dsl::eval(&dsl::parse("<e1>5").unwrap(), &env),
        Err(DslError::Ga(GaError::GradeOutOfRange { .. }))
    ));
    let mut env = env;
    assert!(env.bind("e2", Multivector::one(&alg)).is_err());
    assert!(env.bind("x", Multivector::one(&Algebra::pga(2).unwrap())).is_err());
    let env = env.with("x", Multivector::scalar(&alg, 3.0)).unwrap();
    assert_eq!(env.get("x").unwrap().scalar_part(), 3.0);
}

#[test]
fn evaluator_is_bit_identical_to_library_calls() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let pga = Pga::new(3).unwrap();
    let alg = pga.algebra();
    for _ in 0..50 {
        let pi = sample::line(&mut rng, &pga, 5.0);
        let p = sample::point(&mut rng, &pga, 5.0);
        let a = sample::multivector(&mut rng, alg);
        let b = sample::multivector(&mut rng, alg);
        let env = Environment::new(alg).with("Pi", pi.clone()).unwrap().with("P", p.clone()).unwrap();
        let env = env.with("a", a.clone()).unwrap().with("b", b.clone()).unwrap();
        let ev = |s: &str| dsl::eval(&dsl::parse(s).unwrap(), &env).unwrap();
        assert_eq!(ev("((Pi | P) ^ Pi) & P"), pi.left_contraction(&p).outer(&pi).join(&p));
        assert_eq!(ev("~a * b - a#"), a.reverse().gp(&b).sub(&a.polarity()));
        assert_eq!(ev("<a * b>2 + !a"), a.gp(&b).grade_project(2).add(&a.j_map()));
        assert_eq!(ev("-(a ^ b) | a"), a.outer(&b).scale(-1.0).left_contraction(&a));
        assert_eq!(ev("2 * a"), Multivector::scalar(alg, 2.0).gp(&a));
    }
}

#[test]
fn blade_literals() {
    let alg = Algebra::pga(3).unwrap();
    let env = Environment::<f64>::new(&alg);
    let ev = |s: &str| dsl::eval(&dsl::parse(s).unwrap(), &env).unwrap();
    assert_eq!(ev("e1 * e2"), ev("e12"));
    assert_eq!(ev("e2 * e1"), ev("-e12"));
    assert_eq!(ev("e0123 #"), Multivector::zero(&alg));
    assert_eq!(ev("e123 #"), ev("e0"));
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "b", "Pi", "x_1", "e0", "e12"]).prop_map(Expr::ident),
        (0u32..1000).prop_map(|n| Expr::Num(n as f64 / 8.0)),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        let bin = prop::sample::select(vec![
            BinOp::Add,
            BinOp::Sub,
            BinOp::Join,
            BinOp::Wedge,
            BinOp::Contract,
            BinOp::Product,
        ]);
        let un = prop::sample::select(vec![UnaryOp::Reverse, UnaryOp::Dual, UnaryOp::Polarity, UnaryOp::Neg]);
        prop_oneof![
            (bin, inner.clone(), inner.clone()).prop_map(|(op, l, r)| Expr::binary(op, l, r)),
            (un, inner.clone()).prop_map(|(op, e)| Expr::unary(op, e)),
            (inner, 0usize..5).prop_map(|(e, k)| Expr::Grade(Box::new(e), k)),
        ]
    })
}

proptest! {
    #[test]
    fn printed_trees_reparse(e in arb_expr()) {
        let printed = e.to_string();
        prop_assert_eq!(dsl::parse(&printed).unwrap(), e);
    }
}
