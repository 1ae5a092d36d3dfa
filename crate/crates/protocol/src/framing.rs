use crate::codec::{DecodeError, MAX_FRAME_LEN};

/// Incremental splitter of a byte stream into LF-terminated frames.
///
/// Feed arbitrary chunks (down to one byte at a time); complete frames
/// come back without their terminator. A line that grows past the frame
/// limit yields one `Oversize` error and everything up to the next LF
/// is discarded, so later frames decode normally.
#[derive(Default)]
pub struct FrameReader {
    buf: Vec<u8>,
    skipping_oversize: bool,
}

impl FrameReader {
    pub fn new() -> FrameReader {
        FrameReader::default()
    }

    /// Consumes a chunk, returning every frame it completed.
    pub fn feed(&mut self, bytes: &[u8]) -> Vec<Result<Vec<u8>, DecodeError>> {
        let mut out = Vec::new();
        for &b in bytes {
            if b == b'\n' {
                if self.skipping_oversize {
                    self.skipping_oversize = false;
                } else {
                    out.push(Ok(std::mem::take(&mut self.buf)));
                }
                continue;
            }
            if self.skipping_oversize {
                continue;
            }
            self.buf.push(b);
            // Payload + LF must fit in MAX_FRAME_LEN.
            if self.buf.len() > MAX_FRAME_LEN - 1 {
                out.push(Err(DecodeError::Oversize));
                self.buf.clear();
                self.skipping_oversize = true;
            }
        }
        out
    }

    /// Bytes buffered toward an incomplete frame.
    pub fn pending_len(&self) -> usize {
        self.buf.len()
    }
}
