use anticode::analysis::{coset_alpha, exact_error_sequential};
use anticode::codes::{lookup, parse_code_file, write_code_file};
use anticode::decode::validate_decoding_regions;
use anticode::sim::{efficiency, parse_transcript, write_transcript, Protocol};
use anticode::{sequential_decode, Budget, Codebook, LinearCode, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn efficiencies() {
    let rate = |name: &str| lookup(name).unwrap().efficiency();
    assert!((rate("[28,4,20]") - 2.0 / 7.0).abs() < 1e-12);
    assert!((rate("[100,10,62]") - 0.2).abs() < 1e-12);
    assert_eq!(format!("{:.4}", rate("[39,4,28]")), "0.2051");
    let qc = lookup("[40,5,28]").unwrap().code().unwrap().unwrap();
    assert_eq!(efficiency(&qc), 0.25);
}

#[test]
fn sequential_regions_are_valid_and_match_exact_errors() {
    let budget = Budget::default();
    let code = Codebook::parse("0aa 111 a0b 1b0 bab").unwrap();
    let check = validate_decoding_regions(&code, &budget, |y| {
        sequential_decode(y, &code).unwrap().index()
    })
    .unwrap();
    assert!(check.is_valid());
    let exact = exact_error_sequential(&code, &budget).unwrap();
    for (size, e) in check.sizes.iter().zip(&exact.per_codeword) {
        let from_region = 1.0 - *size as f64 / 27.0;
        assert!((from_region - e.to_f64()).abs() < 1e-12);
    }
    // A decoder that always answers 0 leaves its region outside L(c_0).
    let bad = validate_decoding_regions(&code, &budget, |_| Some(0)).unwrap();
    assert!(!bad.is_valid());
}

#[test]
fn protocol_error_rate_matches_exact() {
    let code = LinearCode::from_rows(&["11111"]).unwrap();
    let exact = coset_alpha(&code, &Budget::default())
        .unwrap()
        .average
        .to_f64();
    let p = Protocol::new(&code, &Budget::default()).unwrap();
    let t = p
        .run(30_000, 200_000, &mut ChaCha8Rng::seed_from_u64(21))
        .unwrap();
    assert_eq!(t.words(), 30_000);
    t.validate().unwrap();
    let sigma = (exact * (1.0 - exact) / 30_000.0).sqrt();
    assert!((t.word_error_rate() - exact).abs() < 4.0 * sigma);
    assert!(t.key_bit_errors() >= t.word_errors());
}

#[test]
fn files_round_trip() {
    let qc = lookup("[40,5,28]").unwrap().code().unwrap().unwrap();
    assert_eq!(parse_code_file(&write_code_file(&qc)).unwrap(), qc);
    let short = qc.shorten(0).unwrap();
    let p = Protocol::new(&short, &Budget::default()).unwrap();
    let t = p.run(50, 5000, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
    let (back, _) = parse_transcript(&write_transcript(&t, &[])).unwrap();
    assert_eq!(back, t);
}
