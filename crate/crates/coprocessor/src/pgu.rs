//! Pattern generator readout path: wave-pipeline register readout, SYNC
//! scheduling and the merger.

use std::io::Write;

use crate::error::CoprocessorError;
use crate::register::S2PRegister;

/// How register contents reach the output transmitter: through the
/// asynchronous merger re-synchronized at its output, or through a
/// parallel-in/serial-out register (same stream, different junction cost).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadoutMode {
    MergerSync,
    P2s,
}

/// Pattern generator configuration: M registers of N bits each, read out at
/// the fast clock.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PguConfig {
    pub register_bits: usize,
    pub register_count: usize,
    pub fast_clock: f64,
    pub readout_mode: ReadoutMode,
}

impl PguConfig {
    pub fn new(
        register_bits: usize,
        register_count: usize,
        fast_clock: f64,
        readout_mode: ReadoutMode,
    ) -> Result<Self, CoprocessorError> {
        if register_bits == 0 || register_count == 0 {
            return Err(CoprocessorError::InvalidConfig(
                "register_bits and register_count must be at least 1".into(),
            ));
        }
        if !(fast_clock > 0.0) {
            return Err(CoprocessorError::InvalidConfig(format!(
                "fast_clock must be positive, got {fast_clock}"
            )));
        }
        Ok(Self {
            register_bits,
            register_count,
            fast_clock,
            readout_mode,
        })
    }

    /// Per-register readout clock f_c/N in hertz (exact ratio).
    pub fn readout_clock(&self) -> f64 {
        self.fast_clock / self.register_bits as f64
    }
}

/// One output tick of the merged stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamedBit {
    pub tick: u64,
    pub bit: bool,
}

/// Stream all registers through the SYNC/merger path.
///
/// Readout is wave-pipelined starting from the last bit of each register, so
/// the serial output replicates the stored pattern in load order; the SYNC
/// gates offset register i by i·N ticks and the merged output is the
/// concatenation of the register contents with one bit per fast-clock tick.
pub fn stream_pgu(
    config: &PguConfig,
    registers: &[S2PRegister],
) -> Result<Vec<StreamedBit>, CoprocessorError> {
    if registers.len() != config.register_count {
        return Err(CoprocessorError::InvalidConfig(format!(
            "config declares {} registers but {} were supplied",
            config.register_count,
            registers.len()
        )));
    }
    let n = config.register_bits;
    let mut schedules = Vec::with_capacity(registers.len());
    for (index, register) in registers.iter().enumerate() {
        let bits = register.read()?;
        if bits.len() != n {
            return Err(CoprocessorError::LengthMismatch {
                expected: n,
                actual: bits.len(),
            });
        }
        // SYNC: this register's pulses occupy ticks [index*N, (index+1)*N)
        let offset = (index * n) as u64;
        let pulses: Vec<u64> = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| offset + k as u64)
            .collect();
        schedules.push(pulses);
    }
    let total_ticks = (registers.len() * n) as u64;
    let pulse_ticks = merge_pulse_streams(&schedules)?;

    let mut out = Vec::with_capacity(total_ticks as usize);
    let mut next = pulse_ticks.iter().peekable();
    for tick in 0..total_ticks {
        let bit = matches!(next.peek(), Some(&&t) if t == tick);
        if bit {
            next.next();
        }
        out.push(StreamedBit { tick, bit });
    }
    Ok(out)
}

/// Ideal asynchronous merger: combines per-register pulse schedules into one
/// timeline, erroring if two pulses share a tick. Conforming SYNC schedules
/// never collide; the check guards hand-built schedules.
fn merge_pulse_streams(schedules: &[Vec<u64>]) -> Result<Vec<u64>, CoprocessorError> {
    let mut merged: Vec<u64> = schedules.iter().flatten().copied().collect();
    merged.sort_unstable();
    for pair in merged.windows(2) {
        if pair[0] == pair[1] {
            return Err(CoprocessorError::MergerCollision { tick: pair[0] });
        }
    }
    Ok(merged)
}

/// Stream dump as CSV rows `tick,bit`.
pub fn write_stream_csv<W: Write>(stream: &[StreamedBit], mut w: W) -> std::io::Result<()> {
    writeln!(w, "tick,bit")?;
    for s in stream {
        writeln!(w, "{},{}", s.tick, if s.bit { 1 } else { 0 })?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loaded(bits: &[bool]) -> S2PRegister {
        let mut r = S2PRegister::new(bits.len());
        r.load(bits).unwrap();
        r
    }

    #[test]
    fn single_register_passthrough() {
        let pattern = [true, false, true, true, false, false, true, false];
        let config = PguConfig::new(8, 1, 40e9, ReadoutMode::MergerSync).unwrap();
        let out = stream_pgu(&config, &[loaded(&pattern)]).unwrap();
        let bits: Vec<bool> = out.iter().map(|s| s.bit).collect();
        assert_eq!(bits, pattern);
        for (k, s) in out.iter().enumerate() {
            assert_eq!(s.tick, k as u64);
        }
    }

    #[test]
    fn two_registers_concatenate_seamlessly() {
        let a = [true, true, false, false];
        let b = [false, true, false, true];
        let config = PguConfig::new(4, 2, 40e9, ReadoutMode::MergerSync).unwrap();
        let out = stream_pgu(&config, &[loaded(&a), loaded(&b)]).unwrap();
        let bits: Vec<bool> = out.iter().map(|s| s.bit).collect();
        let expected: Vec<bool> = a.iter().chain(b.iter()).copied().collect();
        assert_eq!(bits, expected);
        assert_eq!(out.len(), 8);
    }

    #[test]
    fn readout_clock_division() {
        let config = PguConfig::new(1000, 1, 40e9, ReadoutMode::MergerSync).unwrap();
        assert!((config.readout_clock() - 40e6).abs() < 1e-6);
    }

    #[test]
    fn repeated_streaming_is_identical() {
        let pattern = [true, false, false, true, true, false, true, true];
        let reg = loaded(&pattern);
        let config = PguConfig::new(8, 1, 40e9, ReadoutMode::P2s).unwrap();
        let first = stream_pgu(&config, std::slice::from_ref(&reg)).unwrap();
        let second = stream_pgu(&config, std::slice::from_ref(&reg)).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn merger_rejects_colliding_schedules() {
        let schedules = vec![vec![0u64, 3], vec![3u64, 5]];
        assert!(matches!(
            merge_pulse_streams(&schedules),
            Err(CoprocessorError::MergerCollision { tick: 3 })
        ));
    }

    #[test]
    fn unloaded_register_is_rejected() {
        let config = PguConfig::new(4, 1, 40e9, ReadoutMode::MergerSync).unwrap();
        let reg = S2PRegister::new(4);
        assert!(matches!(
            stream_pgu(&config, &[reg]),
            Err(CoprocessorError::NotLoaded)
        ));
    }

    #[test]
    fn stream_csv_format() {
        let stream = [
            StreamedBit { tick: 0, bit: true },
            StreamedBit { tick: 1, bit: false },
        ];
        let mut buf = Vec::new();
        write_stream_csv(&stream, &mut buf).unwrap();
        assert_eq!(String::from_utf8_lossy(&buf), "tick,bit\n0,1\n1,0\n");
    }
}
