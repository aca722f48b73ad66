//! Property sweep: for random register banks the merged PGU stream must
//! reproduce the concatenated register contents bit-exactly, and streaming is
//! nondestructive.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sfq_coprocessor::{stream_pgu, PguConfig, ReadoutMode, S2PRegister};

#[test]
fn random_banks_stream_bit_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..1000 {
        let m = rng.random_range(1..=8usize);
        let n = rng.random_range(1..=1024usize);
        let mode = if rng.random() {
            ReadoutMode::MergerSync
        } else {
            ReadoutMode::P2s
        };
        let config = PguConfig::new(n, m, 40e9, mode).unwrap();

        let mut expected = Vec::with_capacity(m * n);
        let mut registers = Vec::with_capacity(m);
        for _ in 0..m {
            let bits: Vec<bool> = (0..n).map(|_| rng.random()).collect();
            expected.extend_from_slice(&bits);
            let mut reg = S2PRegister::new(n);
            reg.load(&bits).unwrap();
            registers.push(reg);
        }

        let stream = stream_pgu(&config, &registers).unwrap();
        assert_eq!(stream.len(), m * n, "case {case}");
        for (k, s) in stream.iter().enumerate() {
            assert_eq!(s.tick, k as u64, "case {case} tick {k}");
            assert_eq!(s.bit, expected[k], "case {case} bit {k}");
        }
    }
}

#[test]
fn streaming_many_times_never_mutates() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 64;
    let bits: Vec<bool> = (0..n).map(|_| rng.random()).collect();
    let mut reg = S2PRegister::new(n);
    reg.load(&bits).unwrap();
    let config = PguConfig::new(n, 1, 40e9, ReadoutMode::MergerSync).unwrap();
    let registers = [reg];
    let first = stream_pgu(&config, &registers).unwrap();
    for _ in 0..10 {
        assert_eq!(stream_pgu(&config, &registers).unwrap(), first);
    }
    assert_eq!(registers[0].read().unwrap(), &bits[..]);
}
