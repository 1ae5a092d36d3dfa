use std::collections::VecDeque;
use std::io::{self, Read, Write};
use std::net::TcpStream;

use crate::codec::{decode_message, encode_message, DecodeError};
use crate::framing::FrameReader;
use crate::message::Message;

/// One item read from a [`MessageStream`].
#[derive(Debug)]
pub enum Received {
    Message(Message),
    /// A frame arrived but did not decode; the connection is intact.
    Bad(DecodeError),
}

/// Blocking framed-message view of a TCP stream.
///
/// Reading honors the socket's read timeout, surfacing `WouldBlock` /
/// `TimedOut` as ordinary I/O errors while keeping partial frames
/// buffered for the next call.
pub struct MessageStream {
    stream: TcpStream,
    reader: FrameReader,
    ready: VecDeque<Result<Vec<u8>, DecodeError>>,
}

impl MessageStream {
    pub fn new(stream: TcpStream) -> MessageStream {
        MessageStream {
            stream,
            reader: FrameReader::new(),
            ready: VecDeque::new(),
        }
    }

    pub fn get_ref(&self) -> &TcpStream {
        &self.stream
    }

    /// Writes one message as a single frame.
    pub fn send(&mut self, message: &Message) -> io::Result<()> {
        self.stream.write_all(&encode_message(message))
    }

    /// Reads the next frame; `Ok(None)` means the peer closed the
    /// connection cleanly.
    pub fn recv(&mut self) -> io::Result<Option<Received>> {
        loop {
            if let Some(frame) = self.ready.pop_front() {
                return Ok(Some(match frame {
                    Ok(bytes) => match decode_message(&bytes) {
                        Ok(m) => Received::Message(m),
                        Err(e) => Received::Bad(e),
                    },
                    Err(e) => Received::Bad(e),
                }));
            }
            let mut chunk = [0u8; 4096];
            let n = self.stream.read(&mut chunk)?;
            if n == 0 {
                return Ok(None);
            }
            self.ready.extend(self.reader.feed(&chunk[..n]));
        }
    }
}
