from surgery.main import main

main()
