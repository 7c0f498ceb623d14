from uniqdim.cli import main

main()
