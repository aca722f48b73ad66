//! Exact junction-count accounting for the interface fabrics.
//!
//! All per-cell constants live in [`cost`] so the arithmetic behind every
//! formula can be audited in one place.

use serde::Serialize;

use crate::error::CoprocessorError;

/// Junction costs of the SFQ cell library used by the count formulas.
pub mod cost {
    /// Junctions per SFQ merger cell.
    pub const MERGER: u64 = 5;
    /// Junctions per SFQ splitter cell.
    pub const SPLITTER: u64 = 3;
    /// Junctions per NDRO gate.
    pub const NDRO: u64 = 8;
    /// Junctions per SQUID stage in the stacked readout variant.
    pub const SQUID_STAGE: u64 = 2;
    /// Readout-MUX overhead, scaled at one junction per channel.
    pub const MUX_OVERHEAD_PER_CHANNEL: u64 = 1;
    /// Fixed receiver overhead of a DEMUX cell.
    pub const DEMUX_RECEIVER_OVERHEAD: u64 = 3;
}

/// Readout MUX organization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MuxVariant {
    /// Merger/JTL bus: 5 junctions per channel plus 1 overhead each.
    MergerTree,
    /// SQUID stack: 2 junctions per stage plus 1 overhead each (slower).
    SquidStack,
}

/// Readout MUX specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuxSpec {
    pub channels: u64,
    pub variant: MuxVariant,
}

/// Control DEMUX specification (splitter tree with NDRO-gated branches).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DemuxSpec {
    pub channels: u64,
}

/// Junction count of a readout MUX: merger tree 5n + n, SQUID stack 2n + n.
pub fn mux_junctions(spec: &MuxSpec) -> u64 {
    let per_channel = match spec.variant {
        MuxVariant::MergerTree => cost::MERGER,
        MuxVariant::SquidStack => cost::SQUID_STAGE,
    };
    per_channel * spec.channels + cost::MUX_OVERHEAD_PER_CHANNEL * spec.channels
}

/// Junction count of a control DEMUX: 3n + 8n + 3.
pub fn demux_junctions(spec: &DemuxSpec) -> u64 {
    cost::SPLITTER * spec.channels + cost::NDRO * spec.channels + cost::DEMUX_RECEIVER_OVERHEAD
}

/// Extra junctions of a parallel-in/serial-out readout register replacing
/// the merger/synchronizer: 3N − 4, defined for N ≥ 2.
pub fn p2s_junction_overhead(register_bits: u64) -> Result<u64, CoprocessorError> {
    if register_bits < 2 {
        return Err(CoprocessorError::InvalidConfig(format!(
            "p2s overhead is defined for N >= 2, got {register_bits}"
        )));
    }
    Ok(3 * register_bits - 4)
}

/// Junction-count report for one interface configuration.
#[derive(Debug, Clone, Serialize)]
pub struct JunctionReport {
    pub mux_variant: MuxVariant,
    pub mux_channels: u64,
    pub mux_junctions: u64,
    pub demux_channels: u64,
    pub demux_junctions: u64,
    pub p2s_register_bits: Option<u64>,
    pub p2s_overhead_junctions: Option<u64>,
    pub total_junctions: u64,
}

impl JunctionReport {
    /// Assemble the counts for a MUX/DEMUX pair and, when the PGU uses the
    /// P2S readout, the register overhead.
    pub fn new(
        mux: &MuxSpec,
        demux: &DemuxSpec,
        p2s_register_bits: Option<u64>,
    ) -> Result<Self, CoprocessorError> {
        let mux_count = mux_junctions(mux);
        let demux_count = demux_junctions(demux);
        let p2s = p2s_register_bits
            .map(p2s_junction_overhead)
            .transpose()?;
        Ok(Self {
            mux_variant: mux.variant,
            mux_channels: mux.channels,
            mux_junctions: mux_count,
            demux_channels: demux.channels,
            demux_junctions: demux_count,
            p2s_register_bits,
            p2s_overhead_junctions: p2s,
            total_junctions: mux_count + demux_count + p2s.unwrap_or(0),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
