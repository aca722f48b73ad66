//! `sfqctl pgu`: stream stored patterns bit-exactly and report junction
//! counts for the interface fabrics.

use std::fs::File;
use std::io::{BufReader, BufWriter};

use anyhow::{bail, Context};
use sfq_coprocessor::{
    read_pattern_file, stream_pgu, write_stream_csv, DemuxSpec, JunctionReport, MuxSpec,
    MuxVariant, PguConfig, ReadoutMode, S2PRegister,
};

use crate::config::{self, PguCliConfig};
use crate::output;
use crate::CommonArgs;

pub fn run(args: &CommonArgs) -> anyhow::Result<()> {
    let cfg: PguCliConfig = config::load(&args.config)?;
    output::echo_resolved_config(&args.out, &cfg)?;

    let path = config::resolve_path(&args.config, &cfg.pgu.pattern_file);
    let file = File::open(&path)
        .with_context(|| format!("opening pattern file {}", path.display()))?;
    let patterns = read_pattern_file(BufReader::new(file))?;
    if patterns.is_empty() {
        bail!("pattern file {} holds no patterns", path.display());
    }

    let register_bits = cfg.pgu.register_bits.unwrap_or(patterns[0].len());
    let readout_mode = match cfg.pgu.readout_mode.as_str() {
        "merger_sync" => ReadoutMode::MergerSync,
        "p2s" => ReadoutMode::P2s,
        other => bail!("pgu.readout_mode: expected merger_sync or p2s, got {other:?}"),
    };
    let pgu = PguConfig::new(
        register_bits,
        patterns.len(),
        cfg.pgu.fast_clock_ghz * 1e9,
        readout_mode,
    )?;

    let mut registers = Vec::with_capacity(patterns.len());
    for bits in &patterns {
        let mut reg = S2PRegister::new(register_bits);
        reg.load(bits)?;
        registers.push(reg);
    }
    let stream = stream_pgu(&pgu, &registers)?;
    let stream_path = args.out.join("stream.csv");
    write_stream_csv(&stream, BufWriter::new(File::create(&stream_path)?))?;

    let counts = match &cfg.counts {
        Some(section) => {
            let variant = match section.mux_variant.as_str() {
                "merger_tree" => MuxVariant::MergerTree,
                "squid_stack" => MuxVariant::SquidStack,
                other => bail!("counts.mux_variant: expected merger_tree or squid_stack, got {other:?}"),
            };
            let p2s_bits = matches!(readout_mode, ReadoutMode::P2s).then_some(register_bits as u64);
            Some(JunctionReport::new(
                &MuxSpec {
                    channels: section.mux_channels,
                    variant,
                },
                &DemuxSpec {
                    channels: section.demux_channels,
                },
                p2s_bits,
            )?)
        }
        None => None,
    };

    let mut summary = serde_json::json!({
        "command": "pgu",
        "registers": patterns.len(),
        "register_bits": register_bits,
        "fast_clock_hz": pgu.fast_clock,
        "readout_clock_hz": pgu.readout_clock(),
        "stream_ticks": stream.len(),
        "stream": "stream.csv",
    });
    if let Some(report) = &counts {
        summary["junction_counts"] = serde_json::to_value(report)?;
    }
    output::write_report(&args.out, "pgu_report.json", &summary)?;
    output::print_summary(&summary, args.format);
    Ok(())
}
