use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use idealclosure::Error;
use idealclosure_cli::{error_output, parse_problem, run, BOOL_FLAGS, COMMANDS};

const USAGE: &str = "usage: iclose <command> --file <problem> [flags]

Commands:
  gb colon intersect saturate dim height unmixed gci radical0 closed grow
  ascend jacobian-test gorenstein-test mono-closure rees-present rees-ascend
  reduction power-check pfaffians kernel hyp-normal witness

Common flags:
  --file <path>        problem file (`-` reads stdin)
  --ideal <name>       named ideal from the problem file
  --radical <name>     radical candidate ideal
  --max-pairs <n>      S-pair cap for basis computations
  --seed <n>           randomness seed (required by `unmixed`)
  --rmax/--kmax/--nmax/--oracle-K/--max-rounds <n>
  --method auto|radical-formula|jacobian|gorenstein
  --variant minors-only|ideal-plus-minors
  --assert-gen-gorenstein

Exit codes: 0 ok, 2 parse error, 3 inconclusive or hypothesis failure,
4 resource limit, 1 other errors.";

fn emit(json: &serde_json::Value) {
    println!("{}", serde_json::to_string(json).expect("serialize"));
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" {
        eprintln!("{USAGE}");
        return ExitCode::from(if args.is_empty() { 1 } else { 0 });
    }
    let command = args[0].clone();
    if !COMMANDS.contains(&command.as_str()) {
        let out = error_output(
            &command,
            &Error::Degenerate(format!("unknown command `{command}`")),
        );
        emit(&out.json);
        return ExitCode::from(out.exit as u8);
    }

    let mut flags: BTreeMap<String, String> = BTreeMap::new();
    let mut bools: BTreeSet<String> = BTreeSet::new();
    let mut i = 1;
    while i < args.len() {
        let arg = &args[i];
        let Some(name) = arg.strip_prefix("--") else {
            let out = error_output(
                &command,
                &Error::Degenerate(format!("unexpected argument `{arg}`")),
            );
            emit(&out.json);
            return ExitCode::from(out.exit as u8);
        };
        if BOOL_FLAGS.contains(&name) {
            bools.insert(name.to_string());
            i += 1;
            continue;
        }
        let Some(value) = args.get(i + 1) else {
            let out = error_output(
                &command,
                &Error::Degenerate(format!("flag --{name} is missing its value")),
            );
            emit(&out.json);
            return ExitCode::from(out.exit as u8);
        };
        flags.insert(name.to_string(), value.clone());
        i += 2;
    }

    let Some(path) = flags.get("file") else {
        let out = error_output(
            &command,
            &Error::Degenerate("missing required flag --file".into()),
        );
        emit(&out.json);
        return ExitCode::from(out.exit as u8);
    };
    let text = if path == "-" {
        use std::io::Read;
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            let out = error_output(&command, &Error::Degenerate(format!("stdin: {e}")));
            emit(&out.json);
            return ExitCode::from(out.exit as u8);
        }
        buf
    } else {
        match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                let out =
                    error_output(&command, &Error::Degenerate(format!("{path}: {e}")));
                emit(&out.json);
                return ExitCode::from(out.exit as u8);
            }
        }
    };

    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            let out = error_output(&command, &e);
            emit(&out.json);
            return ExitCode::from(out.exit as u8);
        }
    };

    let out = run(&command, &flags, &bools, &problem);
    emit(&out.json);
    ExitCode::from(out.exit as u8)
}
