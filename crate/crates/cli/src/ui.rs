use std::io::IsTerminal;

/// Terminal output; colour only on a TTY and only without ACESFORGE_NO_COLOR / --no-color.
pub struct Ui {
    color: bool,
}

impl Ui {
    pub fn new(no_color_flag: bool) -> Self {
        let env_off = std::env::var_os("ACESFORGE_NO_COLOR").is_some_and(|v| !v.is_empty());
        Ui {
            color: !no_color_flag && !env_off && std::io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn heading(&self, s: &str) {
        println!("{}", self.paint("1", s));
    }

    pub fn line(&self, s: &str) {
        println!("{s}");
    }

    pub fn block(&self, s: &str) {
        print!("{s}");
    }

    pub fn warn(&self, s: &str) {
        eprintln!("{} {s}", self.paint("33", "warning:"));
    }

    pub fn error(&self, s: &str) {
        eprintln!("{} {s}", self.paint("31", "error:"));
    }
}
