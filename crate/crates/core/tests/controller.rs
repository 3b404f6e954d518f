mod common;

use common::{desktop, ids, rng, t1};
use proptest::prelude::*;
use rand::Rng;
use wheeler::event::{ClickTarget, MouseButton, ShiftDirection, Tone};
use wheeler::{
    quantize, Angle, Button, Config, InputEvent, InputKind, Mode, OutputEvent, OutputKind, Session,
    UiTree, Wheel,
};

fn run(s: &mut Session, t: &UiTree, events: &[InputEvent]) -> Vec<OutputEvent> {
    events
        .iter()
        .flat_map(|e| s.handle(t, e).unwrap())
        .collect()
}

fn kinds(out: &[OutputEvent]) -> Vec<OutputKind> {
    out.iter().map(|e| e.kind.clone()).collect()
}

fn chord(t0: u64) -> Vec<InputEvent> {
    vec![
        InputEvent::ctrl_down(t0),
        InputEvent::button_down(t0 + 10, Button::Primary),
        InputEvent::button_down(t0 + 20, Button::Secondary),
        InputEvent::button_up(t0 + 60, Button::Primary),
        InputEvent::button_up(t0 + 70, Button::Secondary),
        InputEvent::ctrl_up(t0 + 80),
    ]
}

fn is_action(k: &OutputKind) -> bool {
    matches!(
        k,
        OutputKind::Click { .. } | OutputKind::LevelShift { .. } | OutputKind::ModeChanged { .. }
    )
}

#[test]
fn ctrl_primary_is_a_level_shift() {
    let t = t1();
    let mut s = Session::new(&t, Config::default()).unwrap();
    let out = run(
        &mut s,
        &t,
        &[
            InputEvent::ctrl_down(0),
            InputEvent::button_down(10, Button::Primary),
            InputEvent::button_up(40, Button::Primary),
            InputEvent::ctrl_up(50),
        ],
    );
    assert_eq!(
        kinds(&out),
        vec![
            OutputKind::LevelShift {
                direction: ShiftDirection::Down
            },
            OutputKind::FocusChanged {
                wheel: Wheel::One,
                node: "n11".into()
            },
            OutputKind::speech("New"),
        ]
    );
    assert!(out.iter().all(|e| e.t == 40));
    assert_eq!(
        ids(&t, s.hnav().focus_triple(&t)),
        [Some("n11"), None, None]
    );
}

#[test]
fn long_press_toggles_teleport() {
    let t = desktop();
    let mut s = Session::new(&t, Config::default()).unwrap();
    s.toggle_mode();
    let out = run(
        &mut s,
        &t,
        &[
            InputEvent::button_down(1000, Button::Secondary),
            InputEvent::button_up(1350, Button::Secondary),
        ],
    );
    assert_eq!(
        kinds(&out),
        vec![OutputKind::ModeChanged {
            mode: Mode::Nav2D,
            teleport: true
        }]
    );
    assert!(s.nav2d().teleport);
}

#[test]
fn long_press_boundary() {
    let t = desktop();
    for (hold, expect_toggle) in [(299, false), (300, true)] {
        let mut s = Session::new(&t, Config::default()).unwrap();
        s.toggle_mode();
        let out = run(
            &mut s,
            &t,
            &[
                InputEvent::button_down(0, Button::Secondary),
                InputEvent::button_up(hold, Button::Secondary),
            ],
        );
        let expected = if expect_toggle {
            OutputKind::ModeChanged {
                mode: Mode::Nav2D,
                teleport: true,
            }
        } else {
            OutputKind::Click {
                button: MouseButton::Right,
                target: ClickTarget::Pos([960, 540]),
            }
        };
        assert_eq!(
            out,
            vec![OutputEvent {
                t: hold,
                kind: expected
            }]
        );
    }
}

#[test]
fn long_press_is_ignored_in_hnav() {
    let t = t1();
    let mut s = Session::new(&t, Config::default()).unwrap();
    let out = run(
        &mut s,
        &t,
        &[
            InputEvent::button_down(0, Button::Secondary),
            InputEvent::button_up(900, Button::Secondary),
        ],
    );
    assert_eq!(
        kinds(&out),
        vec![OutputKind::Click {
            button: MouseButton::Right,
            target: ClickTarget::Node("n1".into()),
        }]
    );
}

#[test]
fn chord_toggles_mode_without_clicks() {
    let t = t1();
    let mut s = Session::new(&t, Config::default()).unwrap();
    let out = run(&mut s, &t, &chord(0));
    assert_eq!(
        kinds(&out),
        vec![
            OutputKind::ModeChanged {
                mode: Mode::Nav2D,
                teleport: false
            },
            OutputKind::Beep { tone: Tone::Mode },
        ]
    );
    assert_eq!(s.mode(), Mode::Nav2D);
}

#[test]
fn ctrl_announces_location_in_nav2d_only() {
    let t = desktop();
    let mut s = Session::new(&t, Config::default()).unwrap();
    assert!(run(
        &mut s,
        &t,
        &[InputEvent::ctrl_down(0), InputEvent::ctrl_up(1)]
    )
    .is_empty());
    s.toggle_mode();
    let out = run(&mut s, &t, &[InputEvent::ctrl_down(2)]);
    assert_eq!(
        kinds(&out),
        vec![OutputKind::speech("50% from the left and 50% from the top")]
    );
}

#[test]
fn toggle_preserves_both_states() {
    let t = desktop();
    let mut s = Session::new(&t, Config::default()).unwrap();
    run(
        &mut s,
        &t,
        &[
            InputEvent::wheel(0, Wheel::One, 20.0),
            InputEvent::wheel(1, Wheel::Two, 40.0),
        ],
    );
    s.toggle_mode();
    run(&mut s, &t, &[InputEvent::wheel(2, Wheel::One, 100.0)]);
    let hnav = s.hnav().clone();
    let pos = s.nav2d().pos;
    let out = s.toggle_mode();
    assert_eq!(
        out.iter()
            .filter(|k| matches!(k, OutputKind::ModeChanged { .. }))
            .count(),
        1
    );
    s.toggle_mode();
    assert_eq!(s.hnav(), &hnav);
    assert_eq!(s.nav2d().pos, pos);
}

fn random_script<R: Rng>(r: &mut R, len: usize) -> Vec<InputEvent> {
    let mut t = 0u64;
    (0..len)
        .map(|_| {
            t += r.gen_range(0..400);
            let button = if r.gen_bool(0.5) {
                Button::Primary
            } else {
                Button::Secondary
            };
            let kind = match r.gen_range(0..9) {
                0..=2 => {
                    let wheel = Wheel::ALL[r.gen_range(0..3)];
                    let micros =
                        r.gen_range(1..=90_000_000i64) * if r.gen_bool(0.5) { 1 } else { -1 };
                    InputKind::WheelTurn {
                        wheel,
                        degrees: Angle::from_micros(micros),
                    }
                }
                3 | 4 => InputKind::ButtonDown(button),
                5 | 6 => InputKind::ButtonUp(button),
                7 => InputKind::KeyDown(wheeler::event::Key::Ctrl),
                _ => InputKind::KeyUp(wheeler::event::Key::Ctrl),
            };
            InputEvent::new(t, kind)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn replay_is_deterministic(seed in any::<u64>()) {
        let t = desktop();
        let script = random_script(&mut rng(seed), 80);
        let mut a = Session::new(&t, Config::default()).unwrap();
        let mut b = Session::new(&t, Config::default()).unwrap();
        prop_assert_eq!(run(&mut a, &t, &script), run(&mut b, &t, &script));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn buttons_act_only_on_release(seed in any::<u64>()) {
        let t = desktop();
        let mut s = Session::new(&t, Config::default()).unwrap();
        for ev in random_script(&mut rng(seed), 120) {
            let out = s.handle(&t, &ev).unwrap();
            match ev.kind {
                InputKind::ButtonDown(_) => prop_assert!(out.is_empty()),
                InputKind::ButtonUp(_) => prop_assert!(out.iter().filter(|e| is_action(&e.kind)).count() <= 1),
                _ => {}
            }
            prop_assert!(out.iter().all(|e| e.t == ev.t));
        }
    }

    #[test]
    fn chord_presses_only_toggle(seed in any::<u64>(), nav2d in any::<bool>()) {
        let t = t1();
        let mut s = Session::new(&t, Config::default()).unwrap();
        // Settle any half-finished presses from the prefix.
        let mut prefix = random_script(&mut rng(seed), 40);
        let end = prefix.last().map_or(0, |e| e.t);
        prefix.extend([
            InputEvent::button_up(end, Button::Primary),
            InputEvent::button_up(end, Button::Secondary),
            InputEvent::ctrl_up(end),
        ]);
        run(&mut s, &t, &prefix);
        if nav2d != (s.mode() == Mode::Nav2D) {
            s.toggle_mode();
        }
        let mode = s.mode();
        let out = run(&mut s, &t, &chord(end + 1));
        let k = kinds(&out);
        prop_assert_eq!(k.iter().filter(|e| matches!(e, OutputKind::ModeChanged { .. })).count(), 1);
        let stray = k.iter().filter(|e| matches!(e, OutputKind::Click { .. } | OutputKind::LevelShift { .. })).count();
        prop_assert_eq!(stray, 0);
        prop_assert_ne!(s.mode(), mode);
    }

    #[test]
    fn quantization_conserves_rotation(seed in any::<u64>(), res_micros in 1i64..90_000_000) {
        let mut r = rng(seed);
        let resolution = Angle::from_micros(res_micros);
        let mut residual = Angle::ZERO;
        let mut detents = 0i64;
        let mut total = Angle::ZERO;
        for _ in 0..200 {
            let d = Angle::from_micros(r.gen_range(-500_000_000i64..500_000_000));
            let (n, rest) = quantize(residual, d, resolution);
            prop_assert!(rest.abs() < resolution);
            detents += n;
            residual = rest;
            total = total + d;
            prop_assert_eq!(resolution * detents + residual, total);
        }
    }
}
