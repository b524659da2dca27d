//! Moves one game through all four list representations.

use simple_trade::convert::{convert, lm_from_w, wm_from_l};
use simple_trade::io::game_to_json;
use simple_trade::{Coalition, GameRep, Limits, RepKind};

fn main() -> simple_trade::Result<()> {
    let c = |p: &[usize]| Coalition::from_players(p.iter().copied());
    // weighted majority: weights 2, 1, 1, 1 and quota 3
    let wm = GameRep::new(
        4,
        RepKind::Wm,
        vec![c(&[0, 1]), c(&[0, 2]), c(&[0, 3]), c(&[1, 2, 3])],
    )?;
    let cap = Limits::default().oracle_cap;
    for kind in RepKind::ALL {
        println!("{kind:>2}: {}", game_to_json(&convert(&wm, kind, cap)?));
    }
    let w = convert(&wm, RepKind::W, cap)?;
    let l = convert(&wm, RepKind::L, cap)?;
    println!("lm_from_w: {:?}", lm_from_w(&w)?);
    println!("wm_from_l: {:?}", wm_from_l(&l)?);
    Ok(())
}
