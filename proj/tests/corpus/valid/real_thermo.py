class Thermo(Module):
    def locals(self):
        self.heater = bool
    def inputs(self):
        self.temp = real
    def init(self):
        self.heater = False
    def next(self):
        if self.temp < 18.5:
            self.heater = True
        elif self.temp > 21.0:
            self.heater = False
