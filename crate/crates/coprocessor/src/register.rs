//! NDRO-based serial-to-parallel shift registers and pattern file I/O.

use std::io::{BufRead, Write};

use crate::error::CoprocessorError;

/// An N-bit S2P register built from nondestructive-readout cells.
///
/// A register must be loaded before it streams; reading leaves the stored
/// bits unchanged, so a loaded pattern can be streamed any number of times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S2PRegister {
    bits: Vec<bool>,
    loaded: bool,
}

impl S2PRegister {
    /// Unloaded register of `capacity` cells.
    pub fn new(capacity: usize) -> Self {
        Self {
            bits: vec![false; capacity],
            loaded: false,
        }
    }

    /// Serially pre-load a pattern; the length must match the register.
    pub fn load(&mut self, bits: &[bool]) -> Result<(), CoprocessorError> {
        if bits.len() != self.bits.len() {
            return Err(CoprocessorError::LengthMismatch {
                expected: self.bits.len(),
                actual: bits.len(),
            });
        }
        self.bits.copy_from_slice(bits);
        self.loaded = true;
        Ok(())
    }

    /// Nondestructive readout of the stored pattern.
    pub fn read(&self) -> Result<&[bool], CoprocessorError> {
        if !self.loaded {
            return Err(CoprocessorError::NotLoaded);
        }
        Ok(&self.bits)
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn is_loaded(&self) -> bool {
        self.loaded
    }
}

/// Read a pattern file: one '0'/'1' string per line, register index implied
/// by line order. Blank lines are skipped.
pub fn read_pattern_file<R: BufRead>(reader: R) -> Result<Vec<Vec<bool>>, CoprocessorError> {
    let mut patterns = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut bits = Vec::with_capacity(trimmed.len());
        for ch in trimmed.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => {
                    return Err(CoprocessorError::BadPatternFile {
                        line: idx + 1,
                        found,
                    })
                }
            }
        }
        patterns.push(bits);
    }
    Ok(patterns)
}

/// Write patterns in the same one-bit-string-per-line format.
pub fn write_pattern_file<W: Write>(
    patterns: &[Vec<bool>],
    mut w: W,
) -> Result<(), CoprocessorError> {
    for bits in patterns {
        let line: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        writeln!(w, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_then_read_twice_is_identical() {
        let mut reg = S2PRegister::new(4);
        reg.load(&[true, false, true, true]).unwrap();
        let first = reg.read().unwrap().to_vec();
        let second = reg.read().unwrap().to_vec();
        assert_eq!(first, second);
        assert_eq!(first, vec![true, false, true, true]);
    }

    #[test]
    fn stream_before_load_is_an_error() {
        let reg = S2PRegister::new(4);
        assert!(matches!(reg.read(), Err(CoprocessorError::NotLoaded)));
    }

    #[test]
    fn length_mismatch_rejected() {
        let mut reg = S2PRegister::new(4);
        assert!(matches!(
            reg.load(&[true, false]),
            Err(CoprocessorError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn all_zeros_streams_silence() {
        let mut reg = S2PRegister::new(8);
        reg.load(&[false; 8]).unwrap();
        assert!(reg.read().unwrap().iter().all(|&b| !b));
    }

    #[test]
    fn pattern_file_roundtrip() {
        let patterns = vec![vec![true, false, true, true], vec![false, false, true, false]];
        let mut buf = Vec::new();
        write_pattern_file(&patterns, &mut buf).unwrap();
        assert_eq!(String::from_utf8_lossy(&buf), "1011\n0010\n");
        let back = read_pattern_file(&buf[..]).unwrap();
        assert_eq!(back, patterns);
    }

    #[test]
    fn pattern_file_rejects_garbage() {
        let err = read_pattern_file("10x1\n".as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            CoprocessorError::BadPatternFile { line: 1, found: 'x' }
        ));
    }
}
