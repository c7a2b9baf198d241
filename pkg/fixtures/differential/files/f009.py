# from nowhere import nothing
annotated: int = 7
pass  # import trailing_decoy
