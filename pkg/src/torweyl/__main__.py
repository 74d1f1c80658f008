from torweyl.cli import main

main()
