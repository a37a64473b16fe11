from pogp.cli import main

main()
