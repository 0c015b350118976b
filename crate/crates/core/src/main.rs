fn main() {
    println!("cherednik CLI placeholder");
}
