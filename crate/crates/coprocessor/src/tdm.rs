//! Time-slot multiplexing of measurement results onto one line: the channel
//! address is encoded in the timing of the bit (slot index within a frame).
//! Assumes sequential, non-simultaneous readout of the channels sharing the
//! line.

use crate::error::CoprocessorError;

/// Encode per-channel bits into a serial frame; channel i's bit occupies
/// slot i. Channels may appear at most once and must fit the frame.
pub fn timeslot_mux(
    channel_results: &[(usize, bool)],
    frame_length: usize,
) -> Result<Vec<bool>, CoprocessorError> {
    let mut frame = vec![false; frame_length];
    let mut seen = vec![false; frame_length];
    for &(channel, bit) in channel_results {
        if channel >= frame_length {
            return Err(CoprocessorError::ChannelOutOfRange {
                channel,
                frame: frame_length,
            });
        }
        if seen[channel] {
            return Err(CoprocessorError::DuplicateChannel { channel });
        }
        seen[channel] = true;
        frame[channel] = bit;
    }
    Ok(frame)
}

/// Decode the first `channels` slots of a frame back to (channel, bit).
pub fn timeslot_demux(frame: &[bool], channels: usize) -> Vec<(usize, bool)> {
    frame
        .iter()
        .take(channels)
        .enumerate()
        .map(|(i, &b)| (i, b))
        .collect()
}
