// Placeholder main; the full command surface lands with the io module.
int main() { return 0; }
