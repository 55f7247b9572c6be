use idemfact::codec::{
    decode_certificate, decode_ge_list, decode_matrix, encode_certificate, encode_ge_list,
    encode_matrix, parse_json, parse_ring_flag, peek_descriptor, to_canonical_string, JsonRing,
};
use idemfact::gen::{singular_matrix, GenSpec, Sample};
use idemfact_core::ge::GEFactor;
use idemfact_core::rings::{GaussianIntegers, Integers, PolyModP, Rationals, RingDescriptor};
use idemfact_core::{factor_singular, Matrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn reserialize(text: &str) -> String {
    to_canonical_string(&parse_json(text).unwrap())
}

fn matrix_round_trip<R: JsonRing + Sample>(ring: &R, desc: RingDescriptor, seed: u64) {
    let a = singular_matrix(
        ring,
        &GenSpec {
            ring: desc,
            size: 3,
            seed,
            bound: 5,
        },
    )
    .unwrap();
    let text = to_canonical_string(&encode_matrix(&a));
    assert_eq!(reserialize(&text), text);
    let v = parse_json(&text).unwrap();
    assert_eq!(peek_descriptor(&v).unwrap(), desc);
    assert_eq!(decode_matrix(ring, &v, "$").unwrap(), a);

    let cert = factor_singular(&a).unwrap();
    let text = to_canonical_string(&encode_certificate(&cert));
    assert_eq!(reserialize(&text), text);
    let back = decode_certificate(ring, &parse_json(&text).unwrap()).unwrap();
    assert_eq!(back.certificate, cert);
    assert_eq!(back.claimed_count, cert.count());
}

#[test]
fn matrices_and_certificates_round_trip_in_every_ring() {
    for seed in 0..5 {
        matrix_round_trip(&Integers, RingDescriptor::Integer, seed);
        matrix_round_trip(&Rationals::rationals(), RingDescriptor::Rational, seed);
        matrix_round_trip(&GaussianIntegers, RingDescriptor::Gauss, seed);
        matrix_round_trip(&PolyModP::new(5).unwrap(), RingDescriptor::PolyMod(5), seed);
    }
}

#[test]
fn canonical_matrix_bytes() {
    let a = Matrix::from_i64(Integers, &[[5, 3], [0, 0]]).unwrap();
    assert_eq!(
        to_canonical_string(&encode_matrix(&a)),
        "{\"cols\":2,\"entries\":[[\"5\",\"3\"],[\"0\",\"0\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":2}\n"
    );
}

#[test]
fn whitespace_and_key_order_do_not_matter() {
    let loose = "{ \"rows\": 1, \"ring\": {\"kind\": \"integer\"},\n \"entries\": [[ \"-4\", 7 ]], \"cols\": 2 }";
    let m = decode_matrix(&Integers, &parse_json(loose).unwrap(), "$").unwrap();
    assert_eq!(m, Matrix::from_i64(Integers, &[[-4, 7]]).unwrap());
}

#[test]
fn parse_errors_carry_a_location() {
    let err = parse_json("{\"rows\": 2,\n \"cols\"").unwrap_err();
    assert!(err.to_string().starts_with("ParseError at line 2"), "{err}");

    let bad = parse_json(
        "{\"cols\":2,\"entries\":[[\"1\",\"x\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":1}",
    )
    .unwrap();
    let err = decode_matrix(&Integers, &bad, "$").unwrap_err();
    assert!(err.to_string().contains("entries[0][1]"), "{err}");

    let short =
        parse_json("{\"cols\":2,\"entries\":[[\"1\"]],\"ring\":{\"kind\":\"integer\"},\"rows\":1}")
            .unwrap();
    assert!(decode_matrix(&Integers, &short, "$").is_err());

    let residue = parse_json(
        "{\"cols\":1,\"entries\":[[[\"5\"]]],\"ring\":{\"kind\":\"polymod\",\"p\":5},\"rows\":1}",
    )
    .unwrap();
    assert!(decode_matrix(&PolyModP::new(5).unwrap(), &residue, "$").is_err());
}

#[test]
fn ring_flags() {
    assert_eq!(parse_ring_flag("integer"), Ok(RingDescriptor::Integer));
    assert_eq!(parse_ring_flag("rational"), Ok(RingDescriptor::Rational));
    assert_eq!(parse_ring_flag("gauss"), Ok(RingDescriptor::Gauss));
    assert_eq!(parse_ring_flag("polymod:7"), Ok(RingDescriptor::PolyMod(7)));
    assert!(parse_ring_flag("polymod:6").is_err());
    assert!(parse_ring_flag("reals").is_err());
}

#[test]
fn ge_lists_round_trip() {
    let fs = vec![
        GEFactor::Swap { i: 0, j: 1 },
        GEFactor::Elementary {
            i: 1,
            j: 0,
            c: BigInt::from(-2),
        },
        GEFactor::DiagUnits(vec![BigInt::from(1), BigInt::from(-1)]),
    ];
    let text = to_canonical_string(&encode_ge_list(&Integers, &fs));
    assert_eq!(reserialize(&text), text);
    assert_eq!(
        decode_ge_list(&Integers, &parse_json(&text).unwrap()).unwrap(),
        fs
    );
}

proptest! {
    #[test]
    fn integer_entries_round_trip(entries in prop::collection::vec(any::<i64>(), 6)) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(<[i64]>::to_vec).collect();
        let m = Matrix::from_i64(Integers, &rows).unwrap();
        let text = to_canonical_string(&encode_matrix(&m));
        prop_assert_eq!(reserialize(&text), text.clone());
        prop_assert_eq!(decode_matrix(&Integers, &parse_json(&text).unwrap(), "$").unwrap(), m);
    }
}
