//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. All arithmetic is exact, so every comparison is exact
//! equality; run with `--nocapture` to see the per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tanglekit_core::{
    run_census, Base, BraidGen, BraidWord, GenWord, Letter, Move, ProjRat, Psl2Elem, TangleExpr,
    TwistSign, XMove,
};

fn report(number: u32, name: &str, started: Instant, limit: Option<Duration>) {
    let elapsed = started.elapsed();
    if let Some(limit) = limit {
        assert!(
            elapsed < limit,
            "criterion {number} ({name}) took {elapsed:?}, limit {limit:?}"
        );
        println!("[acceptance] criterion {number} ({name}): PASS in {elapsed:?} (limit {limit:?})");
    } else {
        println!("[acceptance] criterion {number} ({name}): PASS in {elapsed:?}");
    }
}

/// Raw 2x2 integer product over i64, independent of the library's compose
/// and canonicalization logic.
fn raw_product(letters: &[(Letter, i64)]) -> [i64; 4] {
    let mut acc = [1i64, 0, 0, 1];
    for &(letter, sign) in letters {
        let m = match letter {
            Letter::A => [1, sign, 0, 1],
            Letter::B => [1, 0, sign, 1],
        };
        acc = [
            acc[0] * m[0] + acc[1] * m[2],
            acc[0] * m[1] + acc[1] * m[3],
            acc[2] * m[0] + acc[3] * m[2],
            acc[2] * m[1] + acc[3] * m[3],
        ];
    }
    acc
}

#[test]
fn criterion_1_relation_suite() {
    let started = Instant::now();

    let a = Psl2Elem::gen_a();
    let b = Psl2Elem::gen_b();
    let s = Psl2Elem::s();
    let e = Psl2Elem::identity();

    let step = a.compose(&b.inverse());
    assert_eq!(step.compose(&step).compose(&step), e, "(A B^-1)^3 = E");
    assert_eq!(s.compose(&s), e, "S^2 = E");
    assert_eq!(
        b.inverse().compose(&a).compose(&b.inverse()),
        s,
        "B^-1 A B^-1 = S"
    );
    assert_eq!(a.compose(&b.inverse()).compose(&a), s, "A B^-1 A = S");

    report(1, "relation suite", started, Some(Duration::from_millis(1)));
}

#[test]
fn criterion_2_twist_pair_example() {
    let started = Instant::now();

    let twist = |i: u8, sign: TwistSign| Move::Twist(XMove::new(i, sign).unwrap());
    let long = TangleExpr::new(
        Base::Zero,
        [
            twist(3, TwistSign::Positive),
            twist(2, TwistSign::Positive),
            twist(4, TwistSign::Negative),
            twist(4, TwistSign::Negative),
            twist(3, TwistSign::Positive),
            twist(1, TwistSign::Positive),
        ],
    )
    .unwrap();
    let short = TangleExpr::new(
        Base::Zero,
        [
            twist(3, TwistSign::Positive),
            twist(2, TwistSign::Negative),
            twist(3, TwistSign::Positive),
            twist(1, TwistSign::Positive),
        ],
    )
    .unwrap();

    assert!(long.equivalent(&short));

    // Expected fraction derived independently: multiply the raw letter
    // matrices of A B^-1 A^2 and act on (0, 1).
    let raw = raw_product(&[
        (Letter::A, 1),
        (Letter::B, -1),
        (Letter::A, 1),
        (Letter::A, 1),
    ]);
    let expected = ProjRat::new(raw[1], raw[3]).unwrap();
    assert_eq!(expected, ProjRat::new(-1, 1).unwrap());
    assert_eq!(long.fraction(), expected);
    assert_eq!(short.fraction(), expected);

    report(2, "twist pair example", started, Some(Duration::from_millis(1)));
}

#[test]
fn criterion_3_continued_fraction_example() {
    let started = Instant::now();

    let seven_thirds = ProjRat::new(7, 3).unwrap();
    let cf = seven_thirds.odd_cf().unwrap();
    assert_eq!(
        cf.elements(),
        &[BigInt::from(2), BigInt::from(2), BigInt::from(1)]
    );

    let word = cf.to_word();
    assert_eq!(
        word,
        GenWord::from_syllables([(Letter::A, 2), (Letter::B, 2), (Letter::A, 1)])
    );

    let tangle = TangleExpr::new(
        Base::Zero,
        [
            Move::APower(BigInt::from(2)),
            Move::BPower(BigInt::from(2)),
            Move::APower(BigInt::from(1)),
        ],
    )
    .unwrap();
    assert_eq!(tangle.fraction(), seven_thirds);

    // The even-length form [2, 3] folds to the same value: 2 + 1/3 = 7/3.
    let folded = ProjRat::new(2 * 3 + 1, 3).unwrap();
    assert_eq!(folded, seven_thirds);

    report(3, "continued fraction example", started, None);
}

#[test]
fn criterion_4_classification_census() {
    let started = Instant::now();

    let census = run_census(8).unwrap();
    assert_eq!(census.word_count, ((1u64 << 18) - 1) / 3);
    assert!(
        census.violations.is_empty(),
        "violations: {:?}",
        census.violations
    );

    report(
        4,
        "classification census at length 8",
        started,
        Some(Duration::from_secs(60)),
    );
}

#[test]
fn criterion_5_synthesis_sweep() {
    let started = Instant::now();

    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }

    let mut checked = 0u32;
    for p in -50i64..=50 {
        for q in 1i64..=50 {
            if gcd(p, q) != 1 {
                continue;
            }
            let value = ProjRat::new(p, q).unwrap();
            let canonical = TangleExpr::from_fraction(&value);
            assert_eq!(canonical.fraction(), value, "round trip of {p}/{q}");
            for mv in canonical.moves() {
                let exponent = match mv {
                    Move::APower(e) | Move::BPower(e) => e,
                    other => panic!("unexpected canonical move {other:?}"),
                };
                assert_eq!(
                    exponent.sign(),
                    BigInt::from(p).sign(),
                    "exponent sign of {p}/{q}"
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 3000, "swept {checked} fractions");

    let vertical = TangleExpr::from_fraction(&ProjRat::infinity());
    assert_eq!(vertical.base(), Base::Infinity);
    assert!(vertical.moves().is_empty());

    report(
        5,
        "synthesis sweep |p|,|q| <= 50",
        started,
        Some(Duration::from_secs(5)),
    );
}

fn random_tangle(rng: &mut StdRng) -> TangleExpr {
    let base = if rng.gen_bool(0.5) {
        Base::Zero
    } else {
        Base::Infinity
    };
    let len = rng.gen_range(0..=8);
    let moves = (0..len).map(|_| match rng.gen_range(0..4) {
        0 => {
            let sign = if rng.gen_bool(0.5) {
                TwistSign::Positive
            } else {
                TwistSign::Negative
            };
            Move::Twist(XMove::new(rng.gen_range(1..=4), sign).unwrap())
        }
        1 => Move::APower(BigInt::from(nonzero(rng))),
        2 => Move::BPower(BigInt::from(nonzero(rng))),
        _ => Move::HalfTurn,
    });
    TangleExpr::new(base, moves.collect::<Vec<_>>()).unwrap()
}

fn nonzero(rng: &mut StdRng) -> i64 {
    let e = rng.gen_range(1..=4);
    if rng.gen_bool(0.5) {
        -e
    } else {
        e
    }
}

#[test]
fn criterion_6_half_turn_topology() {
    let started = Instant::now();

    let mut rng = StdRng::seed_from_u64(0x7a6e);
    for _ in 0..1000 {
        let t = random_tangle(&mut rng);
        let rr = t.prefixed([Move::HalfTurn, Move::HalfTurn]).unwrap();
        assert!(t.equivalent(&rr), "R R t != t for {t}");

        let r = t.prefixed([Move::HalfTurn]).unwrap();
        let f = t.fraction();
        let inverted = ProjRat::new(f.denom().clone(), -f.numer().clone()).unwrap();
        assert_eq!(r.fraction(), inverted, "R action on {t}");
    }

    report(6, "half-turn topology on 1000 expressions", started, None);
}

#[test]
fn criterion_7_braid_suite() {
    let started = Instant::now();

    let mut rng = StdRng::seed_from_u64(0xb7a1d);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=8);
        let word = GenWord::from_syllables((0..len).map(|_| {
            let letter = if rng.gen_bool(0.5) { Letter::A } else { Letter::B };
            (letter, BigInt::from(nonzero(&mut rng)))
        }));
        assert_eq!(word.to_braid().to_gen_word(), word, "round trip of {word}");
    }

    let full_twist = BraidWord::from_syllables([
        (BraidGen::Sigma1, 1),
        (BraidGen::Sigma2, 1),
        (BraidGen::Sigma1, 1),
        (BraidGen::Sigma2, 1),
        (BraidGen::Sigma1, 1),
        (BraidGen::Sigma2, 1),
    ]);
    assert!(full_twist.equivalent(&BraidWord::identity()));

    let left = BraidWord::from_syllables([
        (BraidGen::Sigma1, 1),
        (BraidGen::Sigma2, 1),
        (BraidGen::Sigma1, 1),
    ]);
    let right = BraidWord::from_syllables([
        (BraidGen::Sigma2, 1),
        (BraidGen::Sigma1, 1),
        (BraidGen::Sigma2, 1),
    ]);
    assert!(left.equivalent(&right));

    report(7, "braid suite", started, None);
}

#[test]
fn criterion_8_cli_golden_outputs() {
    let started = Instant::now();

    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_tanglekit"))
            .args(args)
            .output()
            .expect("binary runs")
    };

    // Each golden invocation twice, byte-identical both times.
    let golden: [(&[&str], &str, i32); 3] = [
        (&["fraction", "A^2 B^2 A G="], "7/3\n", 0),
        (
            &[
                "equiv",
                "X3+ X2+ X4- X4- X3+ X1+ G=",
                "X3+ X2- X3+ X1+ G=",
            ],
            "true\n",
            0,
        ),
        (&["synth", "0/1"], "G=\n", 0),
    ];
    for (args, expected, code) in golden {
        for _ in 0..2 {
            let out = run(args);
            assert_eq!(out.stdout, expected.as_bytes(), "stdout of {args:?}");
            assert_eq!(out.status.code(), Some(code), "exit code of {args:?}");
        }
    }

    // SVG output is byte-stable across runs for fractions 0, -1, 7/3.
    let dir = tempfile::tempdir().unwrap();
    for (name, expr) in [("zero", "G="), ("minus-one", "A^-1 G="), ("seven-thirds", "A^2 B^2 A G=")]
    {
        let first = dir.path().join(format!("{name}-1.svg"));
        let second = dir.path().join(format!("{name}-2.svg"));
        for path in [&first, &second] {
            let out = run(&["svg", expr, "-o", path.to_str().unwrap()]);
            assert_eq!(out.status.code(), Some(0));
        }
        assert_eq!(
            std::fs::read(&first).unwrap(),
            std::fs::read(&second).unwrap(),
            "svg bytes for {expr}"
        );
    }

    report(8, "CLI golden outputs", started, None);
}
