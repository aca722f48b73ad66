//! Cycle-level behavioral model of the classical SFQ coprocessor: NDRO-based
//! serial-to-parallel registers, the pattern generator's merger/synchronizer
//! readout path, delay demodulation of photon-counter flux states, time-slot
//! multiplexing of measurement results, and exact junction-count accounting
//! for the MUX/DEMUX fabrics.
//!
//! All counts are integer arithmetic; streaming is bit-exact.

pub mod counts;
pub mod demod;
pub mod error;
pub mod pgu;
pub mod register;
pub mod tdm;

pub use counts::{demux_junctions, mux_junctions, p2s_junction_overhead, DemuxSpec, JunctionReport, MuxSpec, MuxVariant};
pub use demod::{jpm_delay_demod, tff_divide, DemodConfig, TimeBin};
pub use error::CoprocessorError;
pub use pgu::{stream_pgu, write_stream_csv, PguConfig, ReadoutMode, StreamedBit};
pub use register::{read_pattern_file, write_pattern_file, S2PRegister};
pub use tdm::{timeslot_demux, timeslot_mux};
