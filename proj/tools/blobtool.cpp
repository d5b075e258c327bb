// Placeholder; the command surface is assembled once the algebra layers land.
int main() { return 0; }
