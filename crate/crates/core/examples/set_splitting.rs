//! Two losing coalitions of a game given by its maximal losing coalitions
//! become a set splitting instance; its solutions are the winning pairs.

use simple_trade::reductions::{build_set_splitting, reconstruct_trade, solve_set_splitting};
use simple_trade::trade::DEFAULT_BRUTE_FORCE_CAP;
use simple_trade::{verify, Coalition, GameRep, RepKind, TradeApplication};

fn main() -> simple_trade::Result<()> {
    let c = |p: &[usize]| Coalition::from_players(p.iter().copied());
    let lm = GameRep::new(
        4,
        RepKind::LM,
        vec![c(&[0, 1]), c(&[1, 2]), c(&[0, 3]), c(&[2, 3])],
    )?;
    let (s1, s2) = (c(&[0, 1]), c(&[2, 3]));

    let inst = build_set_splitting(&lm, s1, s2)?;
    println!(
        "instance {}",
        serde_json::to_string(&inst).expect("serializes")
    );
    match solve_set_splitting(&inst, DEFAULT_BRUTE_FORCE_CAP)? {
        Some((u1, u2)) => {
            let (s3, s4) = reconstruct_trade(s1, s2, u1, u2);
            let app = TradeApplication::new(vec![s1, s2, s3, s4], vec![2, 3]);
            println!(
                "split {u1} | {u2} gives winning {s3}, {s4}; verified {}",
                verify(&lm, &app)
            );
        }
        None => println!("no split, so no trade"),
    }
    Ok(())
}
