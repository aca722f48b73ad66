use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoprocessorError {
    #[error("pattern has {actual} bits, register holds {expected}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("register streamed before being loaded")]
    NotLoaded,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("merger collision: two pulses arrived in tick {tick}")]
    MergerCollision { tick: u64 },

    #[error("pulse delay {delay:.3e} s outside [0, {period:.3e}) s")]
    DelayOutOfRange { delay: f64, period: f64 },

    #[error("channel {channel} reported twice in one frame")]
    DuplicateChannel { channel: usize },

    #[error("channel {channel} does not fit in a frame of length {frame}")]
    ChannelOutOfRange { channel: usize, frame: usize },

    #[error("pattern file line {line}: invalid character {found:?} (expected 0 or 1)")]
    BadPatternFile { line: usize, found: char },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
