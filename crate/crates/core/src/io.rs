//! JSON game files: `{"n": int, "kind": "W"|"L"|"Wm"|"LM", "coalitions": [[int, ...], ...]}`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{GameRep, RepKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub n: usize,
    pub kind: RepKind,
    pub coalitions: Vec<Coalition>,
}

impl From<&GameRep> for GameFile {
    fn from(rep: &GameRep) -> Self {
        GameFile {
            n: rep.n(),
            kind: rep.kind(),
            coalitions: rep.coalitions().to_vec(),
        }
    }
}

impl TryFrom<GameFile> for GameRep {
    type Error = Error;

    /// Rejects duplicate coalitions on top of the range checks in
    /// [`GameRep::new`].
    fn try_from(file: GameFile) -> Result<GameRep> {
        let mut seen = HashSet::new();
        if let Some(dup) = file.coalitions.iter().find(|c| !seen.insert(**c)) {
            return Err(Error::Parse(format!("duplicate coalition {dup}")));
        }
        GameRep::new(file.n, file.kind, file.coalitions)
    }
}

pub fn parse_game(text: &str) -> Result<GameRep> {
    let file: GameFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    GameRep::try_from(file)
}

pub fn game_to_json(rep: &GameRep) -> String {
    serde_json::to_string(&GameFile::from(rep)).expect("game files always serialize")
}

/// Coalition lists such as `[[0,1],[2,3]]`, the grammar used by `--given`.
pub fn parse_coalitions(text: &str) -> Result<Vec<Coalition>> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
