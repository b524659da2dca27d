//! Four players, minimal winning coalitions {0,2} and {1,3}. The losing
//! pair {0,1}, {2,3} trades for the winning pair {0,2}, {1,3}.

use simple_trade::oracle::{brute_force_trade, DEFAULT_ORACLE_BUDGET};
use simple_trade::{
    dispatch, verify, Classification, Coalition, GameRep, Limits, RepKind, TradeQuery,
};

fn main() -> simple_trade::Result<()> {
    let c = |p: &[usize]| Coalition::from_players(p.iter().copied());
    let rep = GameRep::new(4, RepKind::Wm, vec![c(&[0, 2]), c(&[1, 3])])?;
    let given = vec![c(&[0, 1]), c(&[2, 3])];

    let query = TradeQuery {
        rep: rep.clone(),
        beta: Classification::Losing,
        given: given.clone(),
    };
    let answer = dispatch(&query, &Limits::default())?;
    let app = answer.application.expect("the example pair trades");
    println!("given losing {given:?}");
    println!("winning side {:?}", app.winning_side());
    println!("verified: {}", verify(&rep, &app));

    let oracle = brute_force_trade(&rep, 2, Some(&given), DEFAULT_ORACLE_BUDGET)?;
    println!("oracle agrees: {}", oracle.is_some());
    Ok(())
}
