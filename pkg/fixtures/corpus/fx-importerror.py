import i3

i3.command("focus", "left")
