//! Frame JSON interchange format.
//!
//! ```json
//! {"states": ["s0", "s1"], "open": [[0, 1]], "R": [[0, 0]], "Q": [[0, 0]]}
//! ```
//!
//! Omitting `"Q"` means the frame is unified (`Q := R`); omitting `"R"`
//! means the frame is non-modal (both accessibility relations empty), in
//! which case `"Q"` must be absent too.

use super::{FrameError, ModalFrame};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
struct FrameJson {
    states: Vec<String>,
    open: Vec<(usize, usize)>,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    r: Option<Vec<(usize, usize)>>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    q: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, thiserror::Error)]
pub enum FrameJsonError {
    #[error("invalid frame JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("\"Q\" given without \"R\": a non-modal frame has neither")]
    QWithoutR,
}

pub fn frame_from_json(text: &str) -> Result<ModalFrame, FrameJsonError> {
    let raw: FrameJson = serde_json::from_str(text)?;
    let (r, q) = match (raw.r, raw.q) {
        (None, None) => (Vec::new(), Vec::new()),
        (None, Some(_)) => return Err(FrameJsonError::QWithoutR),
        (Some(r), None) => (r.clone(), r),
        (Some(r), Some(q)) => (r, q),
    };
    Ok(ModalFrame::from_relations(raw.states, &raw.open, &r, &q)?)
}

pub fn frame_to_json(frame: &ModalFrame) -> String {
    let r = frame.edges_r();
    let q = frame.edges_q();
    let raw = FrameJson {
        states: frame.state_names().to_vec(),
        open: frame.edges_open(),
        r: if r.is_empty() && q.is_empty() {
            None
        } else {
            Some(r.clone())
        },
        q: if q == r { None } else { Some(q) },
    };
    serde_json::to_string_pretty(&raw).expect("frame serialization cannot fail")
}
